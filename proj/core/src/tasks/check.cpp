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

#include "pbe/tasks/check.hpp"

#include <algorithm>

namespace pbe::tasks {

namespace {

CheckReport check_minilang(const minilang::SyntaxTree& tree, std::span<const Example> examples,
                           const EvalBudget& budget) {
  for (const auto& e : examples) {
    if (!e.input || !std::holds_alternative<Value>(e.output)) return {};
    const auto outcome = minilang::eval(tree, *e.input, budget);
    if (!outcome.ok() || !(outcome.value == std::get<Value>(e.output))) return {};
  }
  return {true, std::nullopt};
}

CheckReport check_turtle(const turtle::Program& program, const Task& task, std::span<const Example> examples,
                         const EvalBudget& budget) {
  AsciiGrid grid;
  try {
    turtle::RenderOptions options;
    options.step_cap = static_cast<std::size_t>(std::max<std::int64_t>(1, budget.fuel));
    grid = turtle::render_ascii(program, options);
  } catch (const Error&) {
    return {};
  }
  const int threshold = task.match.kind == Match::Kind::Grid ? task.match.threshold : 0;
  CheckReport report{true, 0};
  for (const auto& e : examples) {
    if (!std::holds_alternative<AsciiGrid>(e.output)) return {false, report.distance};
    const int d = turtle::grid_distance(grid, std::get<AsciiGrid>(e.output));
    report.distance = std::max(*report.distance, d);
    if (d > threshold) report.pass = false;
  }
  return report;
}

}  // namespace

CheckReport check_examples(const Program& program, const Task& task, std::span<const Example> examples,
                           const EvalBudget& budget) {
  if (task.domain == Domain::Logo) {
    const auto* p = std::get_if<turtle::Program>(&program);
    return p ? check_turtle(*p, task, examples, budget) : CheckReport{};
  }
  const auto* t = std::get_if<minilang::SyntaxTree>(&program);
  return t && !t->empty() ? check_minilang(*t, examples, budget) : CheckReport{};
}

bool check_fit(const Program& program, const Task& task, const EvalBudget& budget) {
  return check_examples(program, task, task.train, budget).pass;
}

bool check_generalization(const Program& program, const Task& task, const EvalBudget& budget) {
  return check_examples(program, task, task.holdout, budget).pass;
}

bool check_fit(const minilang::SyntaxTree& program, const Task& task, const EvalBudget& budget) {
  return check_fit(Program(program), task, budget);
}

bool check_generalization(const minilang::SyntaxTree& program, const Task& task, const EvalBudget& budget) {
  return check_generalization(Program(program), task, budget);
}

}  // namespace pbe::tasks
