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

#ifndef PBE_ENGINE_ADAPT_HPP_
#define PBE_ENGINE_ADAPT_HPP_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbe/engine/datasets.hpp"
#include "pbe/proposer/grammar.hpp"

namespace pbe::engine {

inline constexpr int k_trace_schema_version = 1;

class TrainHookFailure : public Error {
 public:
  using Error::Error;
};

/// Builds the proposer for one round from the current seed. Throwing
/// TrainHookFailure aborts that round without touching the seed.
using TrainHook = std::function<std::unique_ptr<proposer::Proposer>(const SeedDataset& seed, int round)>;

/// Refits `base` on the seed programs each round and samples from the result.
TrainHook grammar_train_hook(proposer::Grammar base, std::uint64_t seed, double smoothing = 1.0);

struct AdaptOptions {
  int rounds = 3;
  std::size_t k = 256;  // samples per task per round
  /// Total samples one round may draw across all tasks; 0 = k per task with
  /// no global cap. Budgets are assigned in task order before the round
  /// starts, so the cap never depends on scheduling.
  std::size_t round_ceiling = 0;
  EvalBudget budget;
  /// Keep only the shortest canonical program per task instead of every
  /// distinct fit-passing one.
  bool one_per_task = false;
  bool stop_when_idle = true;  // stop after a round that solves nothing new
  std::size_t threads = 0;
};

struct AdaptRound {
  int round = 0;
  std::size_t seed_before = 0;
  std::size_t seed_after = 0;
  std::vector<std::string> newly_solved;  // task ids, in task order
  std::size_t cumulative_solved = 0;
  std::size_t k = 0;
  std::size_t samples_drawn = 0;
  std::string proposer_id;
  bool aborted = false;
  std::string error;  // why the round was aborted
};

struct AdaptTrace {
  std::vector<AdaptRound> rounds;
  SeedDataset seed;  // final cumulative seed
};

/// Wake-sleep loop. Each round: build a proposer from the cumulative seed,
/// solve every still-unsolved task exhaustively with k samples, then append
/// one entry per distinct fit-passing program (inputs and outputs taken from
/// the task's training examples). Tasks run concurrently; the seed changes
/// only between rounds. Throws pbe::Error when rounds < 1 or k == 0.
AdaptTrace adapt(SeedDataset seed, std::span<const Task> d_adapt, const TrainHook& train_hook,
                 const AdaptOptions& options = {});

nlohmann::json adapt_round_to_json(const AdaptRound& round);
/// Header line {"schema": "pbe.adapt_trace", "version": 1, ...} then one
/// line per round.
std::string trace_to_jsonl(const AdaptTrace& trace, const nlohmann::json& header_extra = nullptr);

}  // namespace pbe::engine

#endif  // PBE_ENGINE_ADAPT_HPP_
