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

#ifndef PBE_TASKS_CHECK_HPP_
#define PBE_TASKS_CHECK_HPP_

#include <optional>
#include <span>

#include "pbe/minilang/interpreter.hpp"
#include "pbe/tasks/program.hpp"

namespace pbe::tasks {

using minilang::EvalBudget;

struct CheckReport {
  bool pass = false;
  /// Logo only: largest grid_distance over the checked examples, when the
  /// program rendered at all.
  std::optional<int> distance;
};

/// Runs `program` against `examples`. For list and string tasks every output
/// must equal the expected value exactly; errors and fuel exhaustion fail.
/// For logo the program is rendered once (budget.fuel doubles as the turtle
/// step cap) and each grid must lie within the task's match threshold, where
/// an exact match means distance 0.
CheckReport check_examples(const Program& program, const Task& task, std::span<const Example> examples,
                           const EvalBudget& budget = {});

/// All training examples.
bool check_fit(const Program& program, const Task& task, const EvalBudget& budget = {});
/// All holdout examples; vacuously true when there are none.
bool check_generalization(const Program& program, const Task& task, const EvalBudget& budget = {});

bool check_fit(const minilang::SyntaxTree& program, const Task& task, const EvalBudget& budget = {});
bool check_generalization(const minilang::SyntaxTree& program, const Task& task, const EvalBudget& budget = {});

}  // namespace pbe::tasks

#endif  // PBE_TASKS_CHECK_HPP_
