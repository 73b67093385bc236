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

#ifndef PBE_PROPOSER_LLM_HPP_
#define PBE_PROPOSER_LLM_HPP_

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "pbe/proposer/candidate.hpp"

namespace pbe::proposer {

struct LlmConfig {
  std::string endpoint = "http://127.0.0.1:8000/v1";  // chat/completions is appended
  std::string model = "default";
  double temperature = 1.0;
  int max_tokens = 512;
  double timeout_seconds = 60.0;  // per request, connect and read
  int retries = 3;                // extra attempts after the first
  double backoff_seconds = 0.5;   // doubles after each failed attempt
  int concurrency = 4;            // requests in flight per propose call
  int samples_per_request = 1;    // the "n" field
  bool logprobs = true;
  std::string api_key_env = "OPENAI_API_KEY";

  /// Throws pbe::Error when temperature <= 0, concurrency < 1, or the
  /// endpoint is not an http(s) URL.
  void validate() const;
};

/// Chat-completions client. Each choice in a response becomes one candidate:
/// the program is the last fenced code block of the message, and token
/// logprobs, when the server returns them, become per_token and logprob.
///
/// Connection failures, 5xx and 429 are retried with exponential backoff and
/// then raise EndpointUnavailable, as does any other non-200 status. A read
/// timeout drops that request's samples and the stream continues, so a
/// stream can yield fewer than k candidates.
class LlmProposer final : public Proposer {
 public:
  explicit LlmProposer(LlmConfig config);

  std::string id() const override { return "llm:" + config_.model; }
  std::unique_ptr<CandidateStream> propose(const Task& task, std::size_t k, std::uint64_t nonce) override;
  std::unique_ptr<CandidateStream> propose_generation(const GenerationRequest& request, std::size_t k,
                                                      std::uint64_t nonce) override;

  const LlmConfig& config() const { return config_; }

  /// Request body for one call, exposed for tests.
  nlohmann::json request_body(const std::string& prompt, int n) const;

 private:
  std::unique_ptr<CandidateStream> stream(std::string prompt, std::size_t k, Domain domain, bool generation);

  LlmConfig config_;
};

}  // namespace pbe::proposer

#endif  // PBE_PROPOSER_LLM_HPP_
