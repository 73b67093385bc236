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

#ifndef PBE_CLI_CONFIG_HPP_
#define PBE_CLI_CONFIG_HPP_

// Run configuration. A TOML file overlays built-in defaults, and
// "section.key=value" overrides overlay the file. Every key must already
// exist in the defaults and keep its type (an integer may stand in for a
// float). The whole configuration is held as JSON so that it can be hashed
// and embedded in outputs verbatim.

#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbe/engine/adapt.hpp"
#include "pbe/engine/datagen.hpp"
#include "pbe/engine/solve.hpp"
#include "pbe/proposer/llm.hpp"

namespace pbe::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Built-in defaults for every section.
nlohmann::json default_config();

class RunConfig {
 public:
  RunConfig() : doc_(default_config()) {}

  /// Reads a TOML file; relative paths inside it stay relative to the
  /// working directory. Throws ConfigError.
  static RunConfig from_toml_file(const std::filesystem::path& path);
  static RunConfig from_toml(std::string_view text);

  /// "section.key=value"; the value is read as a TOML value, or taken as a
  /// bare string when it is not one.
  void set(std::string_view assignment);
  void set(std::string_view key, nlohmann::json value);

  const nlohmann::json& doc() const { return doc_; }
  const nlohmann::json& at(std::string_view section, std::string_view key) const;
  std::string str(std::string_view section, std::string_view key) const;
  std::int64_t integer(std::string_view section, std::string_view key) const;
  std::size_t count(std::string_view section, std::string_view key) const;  // rejects negatives
  double real(std::string_view section, std::string_view key) const;
  bool flag(std::string_view section, std::string_view key) const;

  /// FNV-1a over the configuration without the output and serve sections
  /// or solve.threads, so runs that differ only in where they write or how
  /// many workers they use share a hash.
  std::string hash() const;
  /// {"proposer": ..., "selection": ..., "generation": ...}
  nlohmann::json seeds() const;

  /// Typed views. Each throws ConfigError on out-of-range values.
  minilang::EvalBudget budget() const;
  engine::SolveOptions solve_options() const;
  engine::DatagenOptions datagen_options() const;
  engine::AdaptOptions adapt_options() const;
  proposer::LlmConfig llm_config() const;
  std::filesystem::path output_dir() const { return str("output", "dir"); }

  /// Throws ConfigError naming the key when `path` (from section.key) is
  /// empty or missing on disk.
  std::filesystem::path existing_path(std::string_view section, std::string_view key) const;

 private:
  nlohmann::json doc_;
};

/// Proposer for one domain as configured: the grammar proposer (default
/// grammar, or productions from proposer.grammar, optionally refit on the
/// programs in proposer.fit_seed) or the LLM client.
std::unique_ptr<proposer::Proposer> make_proposer(const RunConfig& config, tasks::Domain domain);

/// The grammar the configuration samples from in grammar mode, also the
/// prior for difficulty analysis.
proposer::Grammar configured_grammar(const RunConfig& config, tasks::Domain domain);

/// Dispatches each task to a per-domain proposer, built on first use.
class DomainProposer final : public proposer::Proposer {
 public:
  explicit DomainProposer(const RunConfig& config) : config_(config) {}

  std::string id() const override;
  std::unique_ptr<proposer::CandidateStream> propose(const tasks::Task& task, std::size_t k,
                                                     std::uint64_t nonce) override;
  std::unique_ptr<proposer::CandidateStream> propose_generation(const proposer::GenerationRequest& request,
                                                                std::size_t k, std::uint64_t nonce) override;
  bool unconditional() const override { return config_.str("proposer", "kind") == "grammar"; }

  proposer::Proposer& for_domain(tasks::Domain domain);

 private:
  const RunConfig& config_;
  std::mutex mu_;
  std::unique_ptr<proposer::Proposer> by_domain_[3];
};

}  // namespace pbe::cli

#endif  // PBE_CLI_CONFIG_HPP_
