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

#ifndef PBE_PROPOSER_CANDIDATE_HPP_
#define PBE_PROPOSER_CANDIDATE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbe/tasks/task.hpp"

namespace pbe::proposer {

using tasks::Domain;
using tasks::Task;
using tasks::Value;

class EndpointUnavailable : public Error {
 public:
  using Error::Error;
};

struct Candidate {
  std::size_t index = 0;  // sample index within one propose call
  std::string source;
  std::optional<double> logprob;                 // nats
  std::optional<std::vector<double>> per_token;  // sums to logprob when present
  std::string proposer_id;
  bool parseable = false;
  /// Generation only: inputs the proposer chose to go with the program.
  std::optional<std::vector<Value>> inputs;
};

/// Pull-based stream of up to k candidates. Destroying a stream early
/// abandons outstanding work.
class CandidateStream {
 public:
  virtual ~CandidateStream() = default;
  /// nullopt once the stream is exhausted. Throws EndpointUnavailable on
  /// unrecoverable transport failure.
  virtual std::optional<Candidate> next() = 0;
};

/// Stream backed by a generator callable; the callable returns nullopt to end.
class FunctionStream final : public CandidateStream {
 public:
  explicit FunctionStream(std::function<std::optional<Candidate>()> fn) : fn_(std::move(fn)) {}
  std::optional<Candidate> next() override { return fn_(); }

 private:
  std::function<std::optional<Candidate>()> fn_;
};

/// A verified seed program shown to the proposer when asking it to invent
/// new programs.
struct Exemplar {
  std::string program;
  std::vector<Value> inputs;
  std::vector<Value> outputs;
};

struct GenerationRequest {
  Domain domain = Domain::List;
  std::vector<Exemplar> exemplars;
};

/// Source of candidate programs. Implementations must allow concurrent
/// propose calls on distinct tasks. `nonce` separates independent runs on the
/// same task; identical (task, k, nonce) give identical streams for seeded
/// offline proposers.
class Proposer {
 public:
  virtual ~Proposer() = default;
  virtual std::string id() const = 0;
  virtual std::unique_ptr<CandidateStream> propose(const Task& task, std::size_t k, std::uint64_t nonce) = 0;
  virtual std::unique_ptr<CandidateStream> propose_generation(const GenerationRequest& request, std::size_t k,
                                                              std::uint64_t nonce) = 0;
  /// True when candidates do not depend on the examples.
  virtual bool unconditional() const { return false; }
};

/// Drains a stream into a vector.
std::vector<Candidate> collect(CandidateStream& stream);

/// Body of the last fenced code block (``` ... ```), language tag dropped; the
/// whole text trimmed when there is no complete fence.
std::string extract_program(std::string_view text);

/// Inputs attached to a generation response: for string tasks one CSV field
/// per line of the last ```csv block, for list tasks one JSON array per line
/// of the last ```json block. nullopt when the block is absent or malformed.
std::optional<std::vector<Value>> extract_inputs(Domain domain, std::string_view text);

}  // namespace pbe::proposer

#endif  // PBE_PROPOSER_CANDIDATE_HPP_
