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

#ifndef PBE_ENGINE_SOLVE_HPP_
#define PBE_ENGINE_SOLVE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "pbe/minilang/interpreter.hpp"
#include "pbe/proposer/candidate.hpp"
#include "pbe/tasks/metrics.hpp"

namespace pbe::engine {

inline constexpr std::size_t k_default_samples = 256;

struct SolveOptions {
  enum class Stop { FirstFit, Exhaustive };
  enum class Select { Random, First };

  std::size_t k = k_default_samples;
  minilang::EvalBudget budget;
  Stop stop = Stop::FirstFit;
  Select select = Select::Random;
  std::uint64_t selection_seed = 0;
  std::uint64_t nonce = 0;
};

/// Rejection sampling: draws up to k candidates, keeps every one that fits
/// the training examples, and selects one of them. Unparseable and failing
/// candidates are counted, never raised. The selected index is drawn from
/// (selection_seed, task id), so it does not depend on thread scheduling.
/// Throws pbe::Error when k is 0; EndpointUnavailable propagates.
tasks::SolveResult solve(const tasks::Task& task, proposer::Proposer& proposer, const SolveOptions& options = {});

/// solve() over every task, `threads` at a time (0 = hardware concurrency).
/// Results are in task order.
std::vector<tasks::SolveResult> solve_all(std::span<const tasks::Task> tasks, proposer::Proposer& proposer,
                                          const SolveOptions& options = {}, std::size_t threads = 0);

}  // namespace pbe::engine

#endif  // PBE_ENGINE_SOLVE_HPP_
