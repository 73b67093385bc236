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

#include "pbe/proposer/local.hpp"

#include <cmath>

#include "pbe/tasks/program.hpp"

namespace pbe::proposer {

GrammarProposer::GrammarProposer(Grammar grammar, std::uint64_t seed)
    : grammar_(std::make_shared<const Grammar>(std::move(grammar))), seed_(seed) {}

std::string GrammarProposer::id() const { return "grammar:" + grammar_->snapshot_id(); }

std::unique_ptr<CandidateStream> GrammarProposer::stream(std::uint64_t stream_seed, std::size_t k) const {
  struct State {
    std::shared_ptr<const Grammar> grammar;
    Rng rng;
    std::size_t produced = 0;
    std::size_t k;
    std::string id;
  };
  auto st = std::make_shared<State>(State{grammar_, Rng(stream_seed), 0, k, id()});
  return std::make_unique<FunctionStream>([st]() -> std::optional<Candidate> {
    if (st->produced >= st->k) return std::nullopt;
    const GrammarSample s = grammar_sample(*st->grammar, st->rng);
    Candidate c;
    c.index = st->produced++;
    c.source = s.source;
    c.logprob = s.logprob;
    c.proposer_id = st->id;
    c.parseable = true;
    return c;
  });
}

std::unique_ptr<CandidateStream> GrammarProposer::propose(const Task& task, std::size_t k, std::uint64_t nonce) {
  if (task.domain != grammar_->domain())
    throw Error(std::string("grammar proposer for ") + tasks::domain_name(grammar_->domain()) + " given a " +
                tasks::domain_name(task.domain) + " task");
  return stream(mix_seed(mix_seed(seed_, task.id), nonce), k);
}

std::unique_ptr<CandidateStream> GrammarProposer::propose_generation(const GenerationRequest& request, std::size_t k,
                                                                     std::uint64_t nonce) {
  if (request.domain != grammar_->domain()) throw Error("grammar proposer asked to generate for another domain");
  return stream(mix_seed(mix_seed(seed_, "generation"), nonce), k);
}

StubProposer::StubProposer(std::vector<Choice> choices, std::string fallback, std::uint64_t seed)
    : choices_(std::make_shared<const std::vector<Choice>>(std::move(choices))),
      fallback_(std::make_shared<const std::string>(std::move(fallback))),
      seed_(seed) {
  double total = 0;
  for (const auto& c : *choices_) {
    if (!(c.probability >= 0)) throw Error("stub probabilities must be non-negative");
    total += c.probability;
  }
  if (total > 1.0 + 1e-12) throw Error("stub probabilities sum above 1");
}

std::unique_ptr<CandidateStream> StubProposer::stream(std::uint64_t stream_seed, std::size_t k, Domain domain) const {
  struct State {
    std::shared_ptr<const std::vector<Choice>> choices;
    std::shared_ptr<const std::string> fallback;
    Rng rng;
    std::size_t produced = 0;
    std::size_t k;
    Domain domain;
  };
  auto st = std::make_shared<State>(State{choices_, fallback_, Rng(stream_seed), 0, k, domain});
  return std::make_unique<FunctionStream>([st]() -> std::optional<Candidate> {
    if (st->produced >= st->k) return std::nullopt;
    const auto& choices = *st->choices;
    const double u = st->rng.uniform();
    double acc = 0;
    Candidate c;
    c.index = st->produced++;
    c.proposer_id = "stub";
    bool picked = false;
    double rest = 1.0;
    for (const auto& ch : choices) {
      rest -= ch.probability;
      if (!picked && u < acc + ch.probability) {
        c.source = ch.source;
        c.logprob = std::log(ch.probability);
        c.inputs = ch.inputs;
        picked = true;
      }
      acc += ch.probability;
    }
    if (!picked) {
      c.source = *st->fallback;
      c.logprob = std::log(std::max(rest, 0.0));
    }
    c.parseable = tasks::try_parse_program(st->domain, c.source).has_value();
    return c;
  });
}

std::unique_ptr<CandidateStream> StubProposer::propose(const Task& task, std::size_t k, std::uint64_t nonce) {
  return stream(mix_seed(mix_seed(seed_, task.id), nonce), k, task.domain);
}

std::unique_ptr<CandidateStream> StubProposer::propose_generation(const GenerationRequest& request, std::size_t k,
                                                                  std::uint64_t nonce) {
  return stream(mix_seed(mix_seed(seed_, "generation"), nonce), k, request.domain);
}

}  // namespace pbe::proposer
