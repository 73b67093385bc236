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

#include "pbe/engine/adapt.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "pbe/engine/solve.hpp"
#include "pbe/proposer/local.hpp"

namespace pbe::engine {

using nlohmann::json;

TrainHook grammar_train_hook(proposer::Grammar base, std::uint64_t seed, double smoothing) {
  auto shared = std::make_shared<const proposer::Grammar>(std::move(base));
  return [shared, seed, smoothing](const SeedDataset& data, int round) -> std::unique_ptr<proposer::Proposer> {
    if (data.domain != shared->domain()) throw TrainHookFailure("seed domain differs from the grammar's");
    const auto programs = data.programs();
    auto fit = proposer::grammar_fit(*shared, programs, smoothing);
    return std::make_unique<proposer::GrammarProposer>(std::move(fit.grammar),
                                                        mix_seed(seed, static_cast<std::uint64_t>(round)));
  };
}

namespace {

// Distinct fit-passing programs of one result, in sample order.
std::vector<std::string> harvest(const tasks::SolveResult& r, bool one_per_task) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& s : r.satisfying)
    if (seen.insert(s.source).second) out.push_back(s.source);
  if (one_per_task && out.size() > 1) {
    auto best = std::min_element(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    out = {*best};
  }
  return out;
}

}  // namespace

AdaptTrace adapt(SeedDataset seed, std::span<const Task> d_adapt, const TrainHook& train_hook,
                 const AdaptOptions& options) {
  if (options.rounds < 1) throw Error("adaptation needs at least one round");
  if (options.k == 0) throw Error("sample budget k must be at least 1");
  if (!train_hook) throw Error("adaptation needs a train hook");

  AdaptTrace trace;
  std::vector<bool> solved(d_adapt.size(), false);
  std::size_t cumulative = 0;

  for (int round = 0; round < options.rounds; ++round) {
    AdaptRound rec;
    rec.round = round;
    rec.k = options.k;
    rec.seed_before = seed.size();

    std::unique_ptr<proposer::Proposer> prop;
    try {
      prop = train_hook(seed, round);
      if (!prop) throw TrainHookFailure("train hook returned no proposer");
    } catch (const TrainHookFailure& e) {
      rec.aborted = true;
      rec.error = e.what();
      rec.seed_after = seed.size();
      rec.cumulative_solved = cumulative;
      trace.rounds.push_back(std::move(rec));
      continue;
    }
    rec.proposer_id = prop->id();

    // Per-task budgets, fixed up front in task order.
    std::vector<std::size_t> pending;
    std::vector<std::size_t> budgets;
    std::size_t left = options.round_ceiling;
    for (std::size_t i = 0; i < d_adapt.size(); ++i) {
      if (solved[i]) continue;
      std::size_t k = options.k;
      if (options.round_ceiling) {
        k = std::min(k, left);
        left -= k;
      }
      if (k == 0) break;
      pending.push_back(i);
      budgets.push_back(k);
    }

    std::vector<tasks::SolveResult> results(pending.size());
    parallel_for(pending.size(), options.threads, [&](std::size_t j) {
      SolveOptions so;
      so.k = budgets[j];
      so.budget = options.budget;
      so.stop = SolveOptions::Stop::Exhaustive;
      so.select = SolveOptions::Select::First;
      so.nonce = static_cast<std::uint64_t>(round);
      results[j] = solve(d_adapt[pending[j]], *prop, so);
    });

    // Serial seed update at the round boundary.
    for (std::size_t j = 0; j < pending.size(); ++j) {
      const Task& task = d_adapt[pending[j]];
      rec.samples_drawn += results[j].samples_drawn;
      if (!results[j].solved()) continue;
      std::vector<Value> inputs;
      for (const auto& e : task.train)
        if (e.input) inputs.push_back(*e.input);
      bool added = false;
      for (const auto& src : harvest(results[j], options.one_per_task)) {
        auto entry = make_entry(seed.domain, src, inputs, Provenance::adapted(round), options.budget);
        if (!entry) continue;
        entry->origin = task.id;
        seed.entries.push_back(std::move(*entry));
        added = true;
      }
      if (added) {
        solved[pending[j]] = true;
        ++cumulative;
        rec.newly_solved.push_back(task.id);
      }
    }
    rec.seed_after = seed.size();
    rec.cumulative_solved = cumulative;
    const bool idle = rec.newly_solved.empty();
    trace.rounds.push_back(std::move(rec));
    if (idle && options.stop_when_idle) break;
  }
  trace.seed = std::move(seed);
  return trace;
}

json adapt_round_to_json(const AdaptRound& r) {
  json j{{"round", r.round},
         {"seed_before", r.seed_before},
         {"seed_after", r.seed_after},
         {"newly_solved", r.newly_solved},
         {"cumulative_solved", r.cumulative_solved},
         {"k", r.k},
         {"samples_drawn", r.samples_drawn},
         {"proposer", r.proposer_id}};
  if (r.aborted) {
    j["aborted"] = true;
    j["error"] = r.error;
  }
  return j;
}

std::string trace_to_jsonl(const AdaptTrace& trace, const json& header_extra) {
  json header{{"schema", "pbe.adapt_trace"},
              {"version", k_trace_schema_version},
              {"domain", tasks::domain_name(trace.seed.domain)}};
  if (header_extra.is_object())
    for (auto it = header_extra.begin(); it != header_extra.end(); ++it) header[it.key()] = it.value();
  std::string out = header.dump() + "\n";
  for (const auto& r : trace.rounds) out += adapt_round_to_json(r).dump() + "\n";
  return out;
}

}  // namespace pbe::engine
