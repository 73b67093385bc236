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

#include "pbe/engine/datagen.hpp"

#include <numeric>
#include <unordered_set>

#include "pbe/proposer/prompt.hpp"

namespace pbe::engine {

using nlohmann::json;

namespace {

// Consecutive prompts that yield no candidates at all before giving up.
constexpr std::size_t k_max_empty_streams = 100;

std::vector<std::size_t> pick_exemplars(std::size_t population, std::size_t shots, Rng& rng) {
  std::vector<std::size_t> idx(population);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t take = std::min(shots, population);
  for (std::size_t i = 0; i < take; ++i) std::swap(idx[i], idx[i + rng.below(population - i)]);
  idx.resize(take);
  return idx;
}

std::string dedup_key(DedupMode mode, const SeedEntry& entry) {
  if (mode != DedupMode::ProgramAndInputs) return entry.program;
  json in = json::array();
  for (const auto& v : entry.inputs) in.push_back(minilang::to_json(v));
  return entry.program + '\x1f' + in.dump();
}

}  // namespace

const char* dedup_name(DedupMode mode) {
  switch (mode) {
    case DedupMode::None: return "none";
    case DedupMode::Program: return "program";
    case DedupMode::ProgramAndInputs: return "program_and_inputs";
  }
  return "?";
}

DedupMode parse_dedup(std::string_view name) {
  if (name == "none") return DedupMode::None;
  if (name == "program") return DedupMode::Program;
  if (name == "program_and_inputs") return DedupMode::ProgramAndInputs;
  throw Error("unknown dedup mode '" + std::string(name) + "'");
}

std::size_t default_shots(Domain domain) {
  switch (domain) {
    case Domain::List: return 4;
    case Domain::String: return 10;
    case Domain::Logo: return 6;
  }
  return 4;
}

TuneDataset generate_tune_dataset(const SeedDataset& seed, proposer::Proposer& proposer,
                                  const DatagenOptions& options) {
  if (seed.empty()) throw Error("generation needs a non-empty seed dataset");
  if (options.batch == 0) throw Error("generation batch must be at least 1");

  TuneDataset out;
  out.domain = seed.domain;
  const std::size_t shots = options.shots ? options.shots : default_shots(seed.domain);
  const std::string proposer_id = proposer.id();
  Rng exemplar_rng(mix_seed(options.seed, "exemplars"));
  const std::uint64_t input_seed = mix_seed(options.seed, "inputs");
  std::unordered_set<std::string> seen;

  std::size_t window_attempts = 0;
  std::size_t window_accepted = 0;
  std::size_t empty_streams = 0;

  for (std::uint64_t nonce = 0; out.records.size() < options.n; ++nonce) {
    proposer::GenerationRequest request;
    request.domain = seed.domain;
    const auto picked = pick_exemplars(seed.size(), shots, exemplar_rng);
    for (std::size_t i : picked) request.exemplars.push_back(to_exemplar(seed.entries[i]));

    auto stream = proposer.propose_generation(request, options.batch, nonce);
    std::size_t yielded = 0;
    while (out.records.size() < options.n) {
      auto cand = stream->next();
      if (!cand) break;
      ++yielded;
      const std::size_t attempt = out.attempts++;
      ++window_attempts;

      bool sampled_inputs = false;
      std::vector<Value> inputs;
      if (cand->inputs && !cand->inputs->empty()) {
        inputs = *cand->inputs;
      } else {
        Rng rng(mix_seed(input_seed, attempt));
        inputs = sample_inputs(seed.domain, rng, options.inputs);
        sampled_inputs = true;
      }

      std::optional<SeedEntry> entry;
      if (!tasks::try_parse_program(seed.domain, cand->source)) {
        ++out.rejected_parse;
      } else if (!(entry = make_entry(seed.domain, cand->source, inputs, Provenance::manual(), options.budget))) {
        ++out.rejected_exec;
      } else if (options.dedup != DedupMode::None && !seen.insert(dedup_key(options.dedup, *entry)).second) {
        ++out.rejected_duplicate;
        entry.reset();
      }

      if (entry) {
        ++window_accepted;
        TuneRecord r;
        const Task as_task = entry_task(seed.domain, *entry, "gen-" + std::to_string(out.records.size()));
        r.prompt = proposer::render_prompt(as_task).text;
        r.completion = "```\n" + entry->program + "\n```";
        r.meta = {{"domain", tasks::domain_name(seed.domain)},
                  {"proposer", proposer_id},
                  {"seed", options.seed},
                  {"nonce", nonce},
                  {"attempt", attempt},
                  {"exemplars", picked},
                  {"inputs_from", sampled_inputs ? "sampler" : "proposer"}};
        r.program = std::move(entry->program);
        r.inputs = std::move(entry->inputs);
        r.outputs = std::move(entry->outputs);
        out.records.push_back(std::move(r));
      }

      if (window_attempts >= options.stall_window) {
        if (static_cast<double>(window_accepted) < options.stall_rate * static_cast<double>(window_attempts))
          throw GenerationStalled("accepted " + std::to_string(window_accepted) + " of the last " +
                                  std::to_string(window_attempts) + " generated candidates");
        window_attempts = 0;
        window_accepted = 0;
      }
    }
    empty_streams = yielded ? 0 : empty_streams + 1;
    if (empty_streams >= k_max_empty_streams)
      throw GenerationStalled("proposer returned no candidates for " + std::to_string(empty_streams) +
                              " consecutive prompts");
  }
  return out;
}

TuneDataset seed_to_tune(const SeedDataset& seed) {
  TuneDataset out;
  out.domain = seed.domain;
  for (std::size_t i = 0; i < seed.size(); ++i) {
    const SeedEntry& e = seed.entries[i];
    TuneRecord r;
    r.prompt = proposer::render_prompt(entry_task(seed.domain, e, "seed-" + std::to_string(i))).text;
    r.completion = "```\n" + e.program + "\n```";
    r.program = e.program;
    r.inputs = e.inputs;
    r.outputs = e.outputs;
    r.meta = {{"domain", tasks::domain_name(seed.domain)}, {"seed_index", i}};
    if (e.provenance.kind == Provenance::Kind::Adapted) r.meta["adapted_round"] = e.provenance.round;
    out.records.push_back(std::move(r));
  }
  out.attempts = seed.size();
  return out;
}

std::string tune_to_jsonl(const TuneDataset& dataset) {
  std::string out;
  for (const auto& r : dataset.records) {
    json meta = r.meta;
    meta["program"] = r.program;
    meta["inputs"] = json::array();
    for (const auto& v : r.inputs) meta["inputs"].push_back(minilang::to_json(v));
    meta["outputs"] = json::array();
    for (const auto& o : r.outputs) {
      if (const auto* g = std::get_if<tasks::AsciiGrid>(&o)) meta["outputs"].push_back(g->text());
      else meta["outputs"].push_back(minilang::to_json(std::get<Value>(o)));
    }
    out += json{{"prompt", r.prompt}, {"completion", r.completion}, {"meta", meta}}.dump() + "\n";
  }
  return out;
}

}  // namespace pbe::engine
