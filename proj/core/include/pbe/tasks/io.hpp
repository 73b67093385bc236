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

#ifndef PBE_TASKS_IO_HPP_
#define PBE_TASKS_IO_HPP_

// Task files are JSONL, one task per line:
//   {"id": "...", "domain": "list", "train": [{"in": [1, 2], "out": [2, 1]}],
//    "holdout": [...], "match": {"kind": "exact"}}
// Logo examples omit "in" and carry the 32-line grid text as "out"; grid
// matching is {"kind": "grid", "threshold": N}. Blank lines and lines
// starting with '#' are skipped.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbe/tasks/metrics.hpp"
#include "pbe/tasks/task.hpp"

namespace pbe::tasks {

nlohmann::json task_to_json(const Task& task);
/// Validates the task; throws InvalidTask with the offending field.
Task task_from_json(const nlohmann::json& j);

std::vector<Task> parse_tasks(std::string_view jsonl);
std::vector<Task> load_tasks(const std::filesystem::path& path);
std::string tasks_to_jsonl(const std::vector<Task>& tasks);

nlohmann::json result_to_json(const SolveResult& result);
SolveResult result_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const MetricsReport& report);

/// Reads a whole file; throws pbe::Error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
/// Truncates and writes, creating parent directories.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace pbe::tasks

#endif  // PBE_TASKS_IO_HPP_
