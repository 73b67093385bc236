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

#ifndef PBE_TASKS_TASK_HPP_
#define PBE_TASKS_TASK_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pbe/minilang/value.hpp"
#include "pbe/turtle/ascii.hpp"

namespace pbe::tasks {

using minilang::Value;
using turtle::AsciiGrid;

enum class Domain { List, String, Logo };

const char* domain_name(Domain d);
/// "list", "string" or "logo"; throws pbe::Error otherwise.
Domain parse_domain(std::string_view name);

class InvalidTask : public Error {
 public:
  using Error::Error;
};

using Output = std::variant<Value, AsciiGrid>;

struct Example {
  std::optional<Value> input;  // absent for logo
  Output output;
};

struct Match {
  enum class Kind { Exact, Grid };
  Kind kind = Kind::Exact;
  int threshold = 0;  // Grid only: largest accepted grid_distance

  static Match exact() { return {}; }
  static Match grid(int threshold) { return {Kind::Grid, threshold}; }
};

struct Task {
  std::string id;
  Domain domain = Domain::List;
  std::vector<Example> train;
  std::vector<Example> holdout;
  Match match;

  /// Throws InvalidTask when train is empty, a list/string task has no
  /// holdout, or an example's input/output shape disagrees with the domain.
  void validate() const;
};

/// The examples shown to a proposer: the first `limit` training examples.
std::vector<Example> prompt_examples(const Task& task, std::size_t limit = 10);

inline constexpr std::size_t k_prompt_examples = 10;

}  // namespace pbe::tasks

#endif  // PBE_TASKS_TASK_HPP_
