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

#include "pbe/proposer/llm.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "pbe/proposer/prompt.hpp"
#include "pbe/tasks/program.hpp"

namespace pbe::proposer {

namespace {

using nlohmann::json;

struct Url {
  std::string origin;  // scheme://host[:port]
  std::string path;    // base path without trailing slash
};

Url split_url(const std::string& endpoint) {
  const auto scheme = endpoint.find("://");
  if (scheme == std::string::npos) throw Error("endpoint must be an http(s) URL: " + endpoint);
  const auto slash = endpoint.find('/', scheme + 3);
  Url u;
  u.origin = endpoint.substr(0, slash);
  u.path = slash == std::string::npos ? "" : endpoint.substr(slash);
  while (!u.path.empty() && u.path.back() == '/') u.path.pop_back();
  return u;
}

// Outcome of one HTTP exchange after retries.
struct Reply {
  enum class Kind { Ok, TimedOut } kind = Kind::Ok;
  json body;
};

class Caller {
 public:
  explicit Caller(const LlmConfig& cfg) : cfg_(cfg), url_(split_url(cfg.endpoint)), client_(url_.origin) {
    const auto secs = std::chrono::duration<double>(cfg.timeout_seconds);
    const auto usec = std::chrono::duration_cast<std::chrono::microseconds>(secs).count();
    client_.set_connection_timeout(usec / 1'000'000, usec % 1'000'000);
    client_.set_read_timeout(usec / 1'000'000, usec % 1'000'000);
    client_.set_write_timeout(usec / 1'000'000, usec % 1'000'000);
    if (const char* key = std::getenv(cfg.api_key_env.c_str()); key && *key) client_.set_bearer_token_auth(key);
  }

  Reply post(const json& body, const std::atomic<bool>& stop) {
    const std::string payload = body.dump();
    double backoff = cfg_.backoff_seconds;
    std::string last_error;
    for (int attempt = 0; attempt <= cfg_.retries; ++attempt) {
      if (stop) return {Reply::Kind::TimedOut, {}};
      if (attempt > 0) {
        std::this_thread::sleep_for(std::chrono::duration<double>(backoff));
        backoff *= 2;
      }
      auto res = client_.Post(url_.path + "/chat/completions", payload, "application/json");
      if (!res) {
        if (res.error() == httplib::Error::Read) return {Reply::Kind::TimedOut, {}};
        last_error = httplib::to_string(res.error());
        continue;
      }
      if (res->status == 200) {
        try {
          return {Reply::Kind::Ok, json::parse(res->body)};
        } catch (const json::exception& e) {
          throw EndpointUnavailable(std::string("endpoint returned invalid JSON: ") + e.what());
        }
      }
      if (res->status == 429 || res->status >= 500) {
        last_error = "HTTP " + std::to_string(res->status);
        continue;
      }
      throw EndpointUnavailable("endpoint rejected request with HTTP " + std::to_string(res->status) + ": " +
                                res->body.substr(0, 200));
    }
    throw EndpointUnavailable("endpoint unavailable after " + std::to_string(cfg_.retries + 1) +
                              " attempts: " + last_error);
  }

 private:
  const LlmConfig& cfg_;
  Url url_;
  httplib::Client client_;
};

Candidate candidate_from_choice(const json& choice, Domain domain, bool generation, const std::string& proposer_id) {
  Candidate c;
  c.proposer_id = proposer_id;
  std::string content;
  if (choice.contains("message") && choice["message"].contains("content") && choice["message"]["content"].is_string())
    content = choice["message"]["content"].get<std::string>();
  else if (choice.contains("text") && choice["text"].is_string())
    content = choice["text"].get<std::string>();
  c.source = extract_program(content);
  c.parseable = tasks::try_parse_program(domain, c.source).has_value();
  if (generation) c.inputs = extract_inputs(domain, content);
  if (choice.contains("logprobs") && choice["logprobs"].is_object()) {
    const json& lp = choice["logprobs"];
    std::vector<double> tokens;
    if (lp.contains("content") && lp["content"].is_array()) {
      for (const auto& t : lp["content"])
        if (t.contains("logprob") && t["logprob"].is_number()) tokens.push_back(t["logprob"].get<double>());
    } else if (lp.contains("token_logprobs") && lp["token_logprobs"].is_array()) {
      for (const auto& t : lp["token_logprobs"])
        if (t.is_number()) tokens.push_back(t.get<double>());
    }
    if (!tokens.empty()) {
      double sum = 0;
      for (double t : tokens) sum += t;
      c.logprob = sum;
      c.per_token = std::move(tokens);
    }
  }
  return c;
}

// Candidates are produced by a fixed pool of workers and handed out in the
// order they complete. Indices are assigned on delivery.
class LlmStream final : public CandidateStream {
 public:
  LlmStream(const LlmProposer& owner, std::string prompt, std::size_t k, Domain domain, bool generation)
      : cfg_(owner.config()), owner_id_(owner.id()), prompt_(std::move(prompt)), k_(k), domain_(domain),
        generation_(generation) {
    const std::size_t per = static_cast<std::size_t>(std::max(1, cfg_.samples_per_request));
    for (std::size_t left = k_; left > 0;) {
      const std::size_t n = std::min(per, left);
      batches_.push_back(n);
      left -= n;
    }
    bodies_.reserve(batches_.size());
    for (std::size_t n : batches_) bodies_.push_back(owner.request_body(prompt_, static_cast<int>(n)));
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(cfg_.concurrency), batches_.size());
    pending_ = batches_.size();
    for (std::size_t w = 0; w < workers; ++w) threads_.emplace_back([this] { work(); });
  }

  ~LlmStream() override {
    stop_ = true;
    cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  std::optional<Candidate> next() override {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return !ready_.empty() || error_ || pending_ == 0; });
    if (error_) std::rethrow_exception(error_);
    if (ready_.empty() || delivered_ >= k_) return std::nullopt;
    Candidate c = std::move(ready_.front());
    ready_.pop_front();
    c.index = delivered_++;
    return c;
  }

 private:
  void work() {
    Caller caller(cfg_);
    for (;;) {
      const std::size_t slot = next_batch_.fetch_add(1);
      if (slot >= batches_.size() || stop_) return;
      std::vector<Candidate> got;
      try {
        const Reply reply = caller.post(bodies_[slot], stop_);
        if (reply.kind == Reply::Kind::Ok && reply.body.contains("choices") && reply.body["choices"].is_array()) {
          for (const auto& choice : reply.body["choices"]) {
            if (got.size() >= batches_[slot]) break;
            got.push_back(candidate_from_choice(choice, domain_, generation_, owner_id_));
          }
        }
      } catch (...) {
        std::lock_guard lock(mu_);
        if (!error_) error_ = std::current_exception();
        --pending_;
        cv_.notify_all();
        return;
      }
      std::lock_guard lock(mu_);
      for (auto& c : got) ready_.push_back(std::move(c));
      --pending_;
      cv_.notify_all();
    }
  }

  const LlmConfig& cfg_;
  std::string owner_id_;
  std::string prompt_;
  std::size_t k_;
  Domain domain_;
  bool generation_;
  std::vector<std::size_t> batches_;
  std::vector<json> bodies_;
  std::atomic<std::size_t> next_batch_{0};
  std::atomic<bool> stop_{false};
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Candidate> ready_;
  std::size_t pending_ = 0;
  std::size_t delivered_ = 0;
  std::exception_ptr error_;
  std::vector<std::thread> threads_;
};

}  // namespace

void LlmConfig::validate() const {
  if (!(temperature > 0)) throw Error("temperature must be positive");
  if (concurrency < 1) throw Error("concurrency must be at least 1");
  if (samples_per_request < 1) throw Error("samples_per_request must be at least 1");
  if (max_tokens < 1) throw Error("max_tokens must be at least 1");
  if (!(timeout_seconds > 0)) throw Error("timeout must be positive");
  if (retries < 0) throw Error("retries must be non-negative");
  if (!endpoint.starts_with("http://") && !endpoint.starts_with("https://"))
    throw Error("endpoint must be an http(s) URL: " + endpoint);
}

LlmProposer::LlmProposer(LlmConfig config) : config_(std::move(config)) { config_.validate(); }

json LlmProposer::request_body(const std::string& prompt, int n) const {
  json body;
  body["model"] = config_.model;
  body["messages"] = json::array({{{"role", "user"}, {"content", prompt}}});
  body["temperature"] = config_.temperature;
  body["n"] = n;
  body["max_tokens"] = config_.max_tokens;
  body["logprobs"] = config_.logprobs;
  return body;
}

std::unique_ptr<CandidateStream> LlmProposer::stream(std::string prompt, std::size_t k, Domain domain,
                                                     bool generation) {
  if (k == 0) return std::make_unique<FunctionStream>([] { return std::optional<Candidate>(); });
  return std::make_unique<LlmStream>(*this, std::move(prompt), k, domain, generation);
}

std::unique_ptr<CandidateStream> LlmProposer::propose(const Task& task, std::size_t k, std::uint64_t) {
  return stream(render_prompt(task).text, k, task.domain, false);
}

std::unique_ptr<CandidateStream> LlmProposer::propose_generation(const GenerationRequest& request, std::size_t k,
                                                                 std::uint64_t) {
  return stream(render_generation_prompt(request).text, k, request.domain, true);
}

}  // namespace pbe::proposer
