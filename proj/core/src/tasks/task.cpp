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

#include "pbe/tasks/task.hpp"

#include <algorithm>

namespace pbe::tasks {

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::List: return "list";
    case Domain::String: return "string";
    case Domain::Logo: return "logo";
  }
  return "?";
}

Domain parse_domain(std::string_view name) {
  if (name == "list") return Domain::List;
  if (name == "string") return Domain::String;
  if (name == "logo") return Domain::Logo;
  throw Error("unknown domain '" + std::string(name) + "'");
}

void Task::validate() const {
  const auto fail = [&](const std::string& why) { throw InvalidTask("task '" + id + "': " + why); };
  if (id.empty()) throw InvalidTask("task without id");
  if (train.empty()) fail("no training examples");
  if (domain != Domain::Logo && holdout.empty()) fail("list and string tasks need at least one holdout");
  if (match.kind == Match::Kind::Grid && match.threshold < 0) fail("negative grid threshold");
  auto check = [&](const Example& e) {
    const bool grid = std::holds_alternative<AsciiGrid>(e.output);
    if (domain == Domain::Logo) {
      if (!grid) fail("logo outputs must be grids");
      if (e.input) fail("logo examples take no input");
    } else {
      if (grid) fail("grid output in a non-logo task");
      if (!e.input) fail("missing input");
      if (!e.input->is_data() || !std::get<Value>(e.output).is_data()) fail("examples must be plain data");
    }
  };
  std::for_each(train.begin(), train.end(), check);
  std::for_each(holdout.begin(), holdout.end(), check);
}

std::vector<Example> prompt_examples(const Task& task, std::size_t limit) {
  const std::size_t n = std::min(limit, task.train.size());
  return {task.train.begin(), task.train.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace pbe::tasks
