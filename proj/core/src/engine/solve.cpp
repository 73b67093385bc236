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

#include "pbe/engine/solve.hpp"

#include <chrono>

#include "pbe/tasks/check.hpp"
#include "pbe/tasks/program.hpp"

namespace pbe::engine {

tasks::SolveResult solve(const tasks::Task& task, proposer::Proposer& proposer, const SolveOptions& options) {
  if (options.k == 0) throw Error("sample budget k must be at least 1");
  const auto started = std::chrono::steady_clock::now();

  tasks::SolveResult result;
  result.task_id = task.id;
  auto stream = proposer.propose(task, options.k, options.nonce);
  while (result.samples_drawn < options.k) {
    auto cand = stream->next();
    if (!cand) break;
    ++result.samples_drawn;
    const auto program = tasks::try_parse_program(task.domain, cand->source);
    if (!program) {
      ++result.unparseable;
      continue;
    }
    const auto fit = tasks::check_examples(*program, task, task.train, options.budget);
    if (!fit.pass) continue;
    tasks::SolvedProgram s;
    s.index = result.samples_drawn - 1;
    s.source = tasks::print_program(*program);
    s.generalizes = tasks::check_generalization(*program, task, options.budget);
    s.logprob = cand->logprob;
    s.distance = fit.distance;
    result.satisfying.push_back(std::move(s));
    if (!result.first_hit) result.first_hit = result.samples_drawn;
    if (options.stop == SolveOptions::Stop::FirstFit) break;
  }

  if (!result.satisfying.empty()) {
    if (options.select == SolveOptions::Select::First) {
      result.selected = 0;
    } else {
      Rng rng(mix_seed(options.selection_seed, task.id));
      result.selected = static_cast<std::size_t>(rng.below(result.satisfying.size()));
    }
  }
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::vector<tasks::SolveResult> solve_all(std::span<const tasks::Task> tasks, proposer::Proposer& proposer,
                                          const SolveOptions& options, std::size_t threads) {
  std::vector<tasks::SolveResult> results(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) { results[i] = solve(tasks[i], proposer, options); });
  return results;
}

}  // namespace pbe::engine
