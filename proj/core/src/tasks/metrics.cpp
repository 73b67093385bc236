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

#include "pbe/tasks/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

namespace pbe::tasks {

MetricsReport score_run(std::span<const SolveResult> results, std::span<const Task> tasks, bool report_oracle) {
  std::unordered_map<std::string, const SolveResult*> by_id;
  for (const auto& r : results) by_id.emplace(r.task_id, &r);
  MetricsReport report;
  report.tasks = tasks.size();
  std::size_t general = 0, oracle = 0;
  for (const auto& task : tasks) {
    const auto it = by_id.find(task.id);
    if (it == by_id.end()) throw MissingResult("no result for task '" + task.id + "'");
    const SolveResult& r = *it->second;
    MetricsRow row;
    row.task_id = task.id;
    row.solved = r.solved();
    row.generalizes = r.selected && *r.selected < r.satisfying.size() && r.satisfying[*r.selected].generalizes;
    row.oracle = std::any_of(r.satisfying.begin(), r.satisfying.end(), [](const auto& s) { return s.generalizes; });
    general += row.generalizes ? 1 : 0;
    oracle += row.oracle ? 1 : 0;
    report.rows.push_back(std::move(row));
  }
  if (!tasks.empty()) {
    report.generalization_accuracy = static_cast<double>(general) / static_cast<double>(tasks.size());
    if (report_oracle) report.oracle_accuracy = static_cast<double>(oracle) / static_cast<double>(tasks.size());
  } else if (report_oracle) {
    report.oracle_accuracy = 0.0;
  }
  return report;
}

std::string format_report(const MetricsReport& report) {
  char line[128];
  std::string out = "tasks " + std::to_string(report.tasks) + "\n";
  std::snprintf(line, sizeof line, "generalization %.3f", report.generalization_accuracy);
  out += line;
  if (report.oracle_accuracy) {
    std::snprintf(line, sizeof line, " oracle %.3f", *report.oracle_accuracy);
    out += line;
  }
  return out;
}

}  // namespace pbe::tasks
