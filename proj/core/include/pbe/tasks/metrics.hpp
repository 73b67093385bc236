/* Copyright 2026 The pbe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef PBE_TASKS_METRICS_HPP_
#define PBE_TASKS_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pbe/tasks/task.hpp"

namespace pbe::tasks {

class MissingResult : public Error {
 public:
  using Error::Error;
};

/// One fit-passing candidate.
struct SolvedProgram {
  std::size_t index = 0;  // sample index within the run, 0-based
  std::string source;     // canonical text
  bool generalizes = false;
  std::optional<double> logprob;
  std::optional<int> distance;  // logo only
};

struct SolveResult {
  std::string task_id;
  std::vector<SolvedProgram> satisfying;  // in sample order, duplicates kept
  std::size_t samples_drawn = 0;
  std::size_t unparseable = 0;
  std::optional<std::size_t> first_hit;  // 1-based sample count at the first fit
  std::optional<std::size_t> selected;   // index into `satisfying`
  double wall_seconds = 0.0;             // not serialized with results

  bool solved() const { return !satisfying.empty(); }
};

struct MetricsRow {
  std::string task_id;
  bool solved = false;
  bool generalizes = false;  // the selected program passes every holdout
  bool oracle = false;       // some fit-passing program passes every holdout
};

struct MetricsReport {
  std::size_t tasks = 0;
  double generalization_accuracy = 0.0;
  std::optional<double> oracle_accuracy;
  std::vector<MetricsRow> rows;  // in task order
};

/// Scores one result per task using the flags recorded on each result.
/// Throws MissingResult when a task has no result; extra results are ignored.
/// When `report_oracle` is false the oracle column is left empty.
MetricsReport score_run(std::span<const SolveResult> results, std::span<const Task> tasks, bool report_oracle = true);

/// Two-line human summary, e.g. "tasks 10\ngeneralization 0.900 oracle 1.000".
std::string format_report(const MetricsReport& report);

}  // namespace pbe::tasks

#endif  // PBE_TASKS_METRICS_HPP_
