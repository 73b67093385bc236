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

#ifndef PBE_ENGINE_DATAGEN_HPP_
#define PBE_ENGINE_DATAGEN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbe/engine/datasets.hpp"
#include "pbe/engine/input_sampler.hpp"
#include "pbe/proposer/candidate.hpp"

namespace pbe::engine {

class GenerationStalled : public Error {
 public:
  using Error::Error;
};

enum class DedupMode { None, Program, ProgramAndInputs };
const char* dedup_name(DedupMode mode);
DedupMode parse_dedup(std::string_view name);

/// Exemplars per generation prompt: 4 for list, 10 for string, 6 for logo.
std::size_t default_shots(Domain domain);

struct DatagenOptions {
  std::size_t n = 100;
  DedupMode dedup = DedupMode::Program;
  std::size_t shots = 0;  // 0 = default_shots(domain)
  std::uint64_t seed = 0;
  EvalBudget budget;
  /// Used whenever the proposer does not supply inputs with its program.
  InputConfig inputs;
  std::size_t batch = 16;  // candidates requested per prompt
  /// Abort when fewer than stall_rate of the last stall_window attempts were
  /// accepted.
  std::size_t stall_window = 10'000;
  double stall_rate = 0.001;
};

/// One verified training pair: the prompt a solver would see for (X, Y) and
/// the target program as its completion. Y always comes from execution.
struct TuneRecord {
  std::string prompt;
  std::string completion;
  std::string program;  // canonical
  std::vector<Value> inputs;
  std::vector<Output> outputs;
  nlohmann::json meta;
};

struct TuneDataset {
  Domain domain = Domain::List;
  std::vector<TuneRecord> records;
  std::size_t attempts = 0;  // candidates examined
  std::size_t rejected_parse = 0;
  std::size_t rejected_exec = 0;
  std::size_t rejected_duplicate = 0;
};

/// Prompts `proposer` with exemplars drawn from `seed`, executes each
/// candidate on its inputs, and keeps up to options.n verified, deduplicated
/// records. Candidate streams are consumed serially, so the result depends
/// only on the proposer's streams and options.seed.
/// Throws pbe::Error on an empty seed, GenerationStalled when acceptance
/// drops below the stall rate.
TuneDataset generate_tune_dataset(const SeedDataset& seed, proposer::Proposer& proposer,
                                  const DatagenOptions& options = {});

/// Every seed entry as a record, for handing the seed itself to an external
/// fine-tuning job.
TuneDataset seed_to_tune(const SeedDataset& seed);

/// {prompt, completion, meta} per line.
std::string tune_to_jsonl(const TuneDataset& dataset);

}  // namespace pbe::engine

#endif  // PBE_ENGINE_DATAGEN_HPP_
