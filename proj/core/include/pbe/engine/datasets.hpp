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

#ifndef PBE_ENGINE_DATASETS_HPP_
#define PBE_ENGINE_DATASETS_HPP_

// Seed files are JSONL. The first line is a header,
//   {"schema": "pbe.seed", "version": 1, "domain": "list"}
// and every following line is one entry,
//   {"program": "...", "inputs": [...], "outputs": [...], "provenance": "manual"}
// where provenance is "manual" or {"adapted": <round>}. Logo entries have no
// inputs and a single output holding the 32-line grid text.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pbe/minilang/interpreter.hpp"
#include "pbe/proposer/candidate.hpp"
#include "pbe/tasks/program.hpp"
#include "pbe/tasks/task.hpp"

namespace pbe::engine {

using minilang::EvalBudget;
using tasks::Domain;
using tasks::Output;
using tasks::Task;
using tasks::Value;

inline constexpr int k_seed_schema_version = 1;

class InvalidSeed : public Error {
 public:
  using Error::Error;
};

struct Provenance {
  enum class Kind { Manual, Adapted };
  Kind kind = Kind::Manual;
  int round = 0;  // Adapted only

  static Provenance manual() { return {}; }
  static Provenance adapted(int round) { return {Kind::Adapted, round}; }
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SeedEntry {
  std::string program;  // canonical text
  std::vector<Value> inputs;
  std::vector<Output> outputs;
  Provenance provenance;
  std::string origin;  // task id the entry was harvested from, if any
};

struct SeedDataset {
  Domain domain = Domain::List;
  std::vector<SeedEntry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  std::vector<std::string> programs() const;
};

/// Unlabeled tasks: examples only, never program text.
using AdaptDataset = std::vector<Task>;

/// Output of `program` on one input, or nullopt when evaluation fails or
/// yields a function. Logo programs ignore the input and render to a grid,
/// with budget.fuel as the turtle step cap.
std::optional<Output> execute(const tasks::Program& program, Domain domain, const std::optional<Value>& input,
                              const EvalBudget& budget = {});

/// Parses, canonicalizes and runs `source` on every input; nullopt when any
/// step fails. Logo entries ignore `inputs` and get one grid output.
std::optional<SeedEntry> make_entry(Domain domain, std::string_view source, std::span<const Value> inputs,
                                    Provenance provenance = {}, const EvalBudget& budget = {});

/// True when re-executing the entry reproduces its outputs exactly.
bool verify_entry(Domain domain, const SeedEntry& entry, const EvalBudget& budget = {});

/// Exemplar form shown to a generating proposer.
proposer::Exemplar to_exemplar(const SeedEntry& entry);

/// A task whose train examples are the entry's input/output pairs, for
/// rendering a prompt or checking a program against the entry.
Task entry_task(Domain domain, const SeedEntry& entry, std::string id = "seed");

nlohmann::json seed_entry_to_json(Domain domain, const SeedEntry& entry);
std::string seed_to_jsonl(const SeedDataset& seed);

/// Throws InvalidSeed on a bad header, a malformed line, or (when `verify`)
/// an entry whose outputs do not reproduce.
SeedDataset parse_seed(std::string_view jsonl, bool verify = true, const EvalBudget& budget = {});
SeedDataset load_seed(const std::filesystem::path& path, bool verify = true, const EvalBudget& budget = {});
void save_seed(const std::filesystem::path& path, const SeedDataset& seed);

}  // namespace pbe::engine

#endif  // PBE_ENGINE_DATASETS_HPP_
