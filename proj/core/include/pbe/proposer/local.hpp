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

#ifndef PBE_PROPOSER_LOCAL_HPP_
#define PBE_PROPOSER_LOCAL_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pbe/proposer/candidate.hpp"
#include "pbe/proposer/grammar.hpp"

namespace pbe::proposer {

/// Samples from a grammar, ignoring the examples. The stream for a task is
/// seeded from (seed, task id, nonce), so runs are reproducible and tasks
/// are independent of the order in which they are solved.
class GrammarProposer final : public Proposer {
 public:
  GrammarProposer(Grammar grammar, std::uint64_t seed);

  std::string id() const override;
  std::unique_ptr<CandidateStream> propose(const Task& task, std::size_t k, std::uint64_t nonce) override;
  std::unique_ptr<CandidateStream> propose_generation(const GenerationRequest& request, std::size_t k,
                                                      std::uint64_t nonce) override;
  bool unconditional() const override { return true; }

  const Grammar& grammar() const { return *grammar_; }

 private:
  std::unique_ptr<CandidateStream> stream(std::uint64_t stream_seed, std::size_t k) const;

  std::shared_ptr<const Grammar> grammar_;
  std::uint64_t seed_;
};

/// Fixed menu of programs drawn with given probabilities; leftover mass goes
/// to `fallback`. Useful as a calibrated oracle in tests.
class StubProposer final : public Proposer {
 public:
  struct Choice {
    std::string source;
    double probability = 0.0;
    std::optional<std::vector<Value>> inputs;
  };

  /// Probabilities must be non-negative and sum to at most 1.
  StubProposer(std::vector<Choice> choices, std::string fallback, std::uint64_t seed);

  std::string id() const override { return "stub"; }
  std::unique_ptr<CandidateStream> propose(const Task& task, std::size_t k, std::uint64_t nonce) override;
  std::unique_ptr<CandidateStream> propose_generation(const GenerationRequest& request, std::size_t k,
                                                      std::uint64_t nonce) override;
  bool unconditional() const override { return true; }

 private:
  std::unique_ptr<CandidateStream> stream(std::uint64_t stream_seed, std::size_t k, Domain domain) const;

  std::shared_ptr<const std::vector<Choice>> choices_;
  std::shared_ptr<const std::string> fallback_;
  std::uint64_t seed_;
};

}  // namespace pbe::proposer

#endif  // PBE_PROPOSER_LOCAL_HPP_
