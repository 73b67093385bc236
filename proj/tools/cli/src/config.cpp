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

#include "pbe/cli/config.hpp"

#include <toml.hpp>

#include "pbe/engine/datasets.hpp"
#include "pbe/proposer/default_grammars.hpp"
#include "pbe/proposer/local.hpp"
#include "pbe/tasks/io.hpp"

namespace pbe::cli {

using nlohmann::json;

json default_config() {
  return json::parse(R"({
    "proposer": {"kind": "grammar", "seed": 0, "grammar": "", "fit_seed": "", "smoothing": 1.0},
    "llm": {"endpoint": "http://127.0.0.1:8000/v1", "model": "default", "temperature": 1.0,
            "max_tokens": 512, "timeout": 60.0, "retries": 3, "backoff": 0.5, "concurrency": 4,
            "samples_per_request": 1, "logprobs": true, "api_key_env": "OPENAI_API_KEY"},
    "budget": {"k": 256, "fuel": 100000, "max_list_len": 10000, "max_str_len": 100000, "max_depth": 2000},
    "solve": {"tasks": "", "stop": "first", "select": "random", "selection_seed": 0, "threads": 0},
    "gen": {"seed": "", "n": 100, "dedup": "program", "shots": 0, "batch": 16, "rng_seed": 0,
            "inputs_per_program": 5},
    "adapt": {"seed": "", "tasks": "", "rounds": 3, "round_ceiling": 0, "one_per_task": false,
              "stop_when_idle": true, "tune_out": "", "ready_url": "", "ready_timeout": 600.0},
    "analyze": {"tasks": "", "results": "", "trials": 10, "k_cap": 256},
    "serve": {"host": "127.0.0.1", "port": 8080, "workers": 4, "feedback": "feedback.jsonl", "max_k": 4096},
    "output": {"dir": "out"}
  })");
}

namespace {

json toml_node_to_json(const toml::node& node, const std::string& where) {
  if (const auto* t = node.as_table()) {
    json out = json::object();
    for (auto&& [k, v] : *t) out[std::string(k.str())] = toml_node_to_json(v, where + "." + std::string(k.str()));
    return out;
  }
  if (const auto* a = node.as_array()) {
    json out = json::array();
    for (const auto& v : *a) out.push_back(toml_node_to_json(v, where));
    return out;
  }
  if (const auto* s = node.as_string()) return s->get();
  if (const auto* i = node.as_integer()) return i->get();
  if (const auto* f = node.as_floating_point()) return f->get();
  if (const auto* b = node.as_boolean()) return b->get();
  throw ConfigError("unsupported TOML value at " + where);
}

bool compatible(const json& want, const json& got) {
  if (want.is_boolean()) return got.is_boolean();
  if (want.is_number_float()) return got.is_number();
  if (want.is_number_integer()) return got.is_number_integer();
  if (want.is_string()) return got.is_string();
  return want.type() == got.type();
}

void overlay(json& base, const json& top, const std::string& where) {
  if (!top.is_object()) throw ConfigError("expected a table at " + where);
  for (auto it = top.begin(); it != top.end(); ++it) {
    const std::string key = where.empty() ? it.key() : where + "." + it.key();
    if (!base.contains(it.key())) throw ConfigError("unknown config key '" + key + "'");
    json& slot = base[it.key()];
    if (slot.is_object()) {
      overlay(slot, it.value(), key);
    } else {
      if (!compatible(slot, it.value()))
        throw ConfigError("config key '" + key + "' expects " + std::string(slot.type_name()) + ", got " +
                          std::string(it.value().type_name()));
      slot = slot.is_number_float() ? json(it.value().get<double>()) : it.value();
    }
  }
}

RunConfig from_table(const toml::table& table) {
  RunConfig c;
  const json j = toml_node_to_json(table, "");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_object()) throw ConfigError("top-level key '" + it.key() + "' must be a table");
    for (auto s = it.value().begin(); s != it.value().end(); ++s) c.set(it.key() + "." + s.key(), s.value());
  }
  return c;
}

}  // namespace

RunConfig RunConfig::from_toml(std::string_view text) {
  try {
    return from_table(toml::parse(text));
  } catch (const toml::parse_error& e) {
    throw ConfigError(std::string("TOML: ") + std::string(e.description()) + " at line " +
                      std::to_string(e.source().begin.line));
  }
}

RunConfig RunConfig::from_toml_file(const std::filesystem::path& path) {
  std::string text;
  try {
    text = tasks::read_file(path);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  try {
    return from_toml(text);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void RunConfig::set(std::string_view key, json value) {
  const auto dot = key.find('.');
  if (dot == std::string_view::npos) throw ConfigError("override key must be section.key: " + std::string(key));
  json patch = json::object();
  patch[std::string(key.substr(0, dot))][std::string(key.substr(dot + 1))] = std::move(value);
  overlay(doc_, patch, "");
}

void RunConfig::set(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ConfigError("override must look like section.key=value");
  const std::string key(assignment.substr(0, eq));
  const std::string raw(assignment.substr(eq + 1));
  const auto dot = key.find('.');
  const bool string_slot = dot != std::string::npos && doc_.contains(key.substr(0, dot)) &&
                           doc_[key.substr(0, dot)].contains(key.substr(dot + 1)) &&
                           doc_[key.substr(0, dot)][key.substr(dot + 1)].is_string();
  json value = raw;  // string slots take the text as is, quotes included
  if (!string_slot) {
    try {
      const auto t = toml::parse("v = " + raw);
      value = toml_node_to_json(*t.get("v"), key);
    } catch (const toml::parse_error&) {
      // left as a string; set() reports the type mismatch
    }
  }
  set(key, std::move(value));
}

const json& RunConfig::at(std::string_view section, std::string_view key) const {
  const std::string s(section), k(key);
  if (!doc_.contains(s) || !doc_[s].contains(k)) throw ConfigError("no config key " + s + "." + k);
  return doc_[s][k];
}

std::string RunConfig::str(std::string_view section, std::string_view key) const {
  return at(section, key).get<std::string>();
}

std::int64_t RunConfig::integer(std::string_view section, std::string_view key) const {
  return at(section, key).get<std::int64_t>();
}

std::size_t RunConfig::count(std::string_view section, std::string_view key) const {
  const auto v = integer(section, key);
  if (v < 0) throw ConfigError(std::string(section) + "." + std::string(key) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

double RunConfig::real(std::string_view section, std::string_view key) const {
  return at(section, key).get<double>();
}

bool RunConfig::flag(std::string_view section, std::string_view key) const { return at(section, key).get<bool>(); }

std::string RunConfig::hash() const {
  json h = doc_;
  h.erase("output");
  h.erase("serve");
  h["solve"].erase("threads");  // scheduling only; results do not depend on it
  return hex64(fnv1a(h.dump()));
}

json RunConfig::seeds() const {
  return {{"proposer", doc_["proposer"]["seed"]},
          {"selection", doc_["solve"]["selection_seed"]},
          {"generation", doc_["gen"]["rng_seed"]}};
}

minilang::EvalBudget RunConfig::budget() const {
  minilang::EvalBudget b;
  b.fuel = integer("budget", "fuel");
  if (b.fuel < 1) throw ConfigError("budget.fuel must be positive");
  b.max_list_len = count("budget", "max_list_len");
  b.max_str_len = count("budget", "max_str_len");
  b.max_depth = count("budget", "max_depth");
  return b;
}

engine::SolveOptions RunConfig::solve_options() const {
  engine::SolveOptions o;
  o.k = count("budget", "k");
  if (o.k == 0) throw ConfigError("budget.k must be at least 1");
  o.budget = budget();
  const std::string stop = str("solve", "stop");
  if (stop == "first") o.stop = engine::SolveOptions::Stop::FirstFit;
  else if (stop == "exhaustive") o.stop = engine::SolveOptions::Stop::Exhaustive;
  else throw ConfigError("solve.stop must be 'first' or 'exhaustive'");
  const std::string select = str("solve", "select");
  if (select == "random") o.select = engine::SolveOptions::Select::Random;
  else if (select == "first") o.select = engine::SolveOptions::Select::First;
  else throw ConfigError("solve.select must be 'random' or 'first'");
  o.selection_seed = static_cast<std::uint64_t>(integer("solve", "selection_seed"));
  return o;
}

engine::DatagenOptions RunConfig::datagen_options() const {
  engine::DatagenOptions o;
  o.n = count("gen", "n");
  try {
    o.dedup = engine::parse_dedup(str("gen", "dedup"));
  } catch (const Error& e) {
    throw ConfigError(std::string("gen.dedup: ") + e.what());
  }
  o.shots = count("gen", "shots");
  o.batch = count("gen", "batch");
  if (o.batch == 0) throw ConfigError("gen.batch must be at least 1");
  o.seed = static_cast<std::uint64_t>(integer("gen", "rng_seed"));
  o.budget = budget();
  o.inputs.count = count("gen", "inputs_per_program");
  return o;
}

engine::AdaptOptions RunConfig::adapt_options() const {
  engine::AdaptOptions o;
  o.rounds = static_cast<int>(integer("adapt", "rounds"));
  if (o.rounds < 1) throw ConfigError("adapt.rounds must be at least 1");
  o.k = count("budget", "k");
  if (o.k == 0) throw ConfigError("budget.k must be at least 1");
  o.round_ceiling = count("adapt", "round_ceiling");
  o.budget = budget();
  o.one_per_task = flag("adapt", "one_per_task");
  o.stop_when_idle = flag("adapt", "stop_when_idle");
  o.threads = count("solve", "threads");
  return o;
}

proposer::LlmConfig RunConfig::llm_config() const {
  proposer::LlmConfig c;
  c.endpoint = str("llm", "endpoint");
  c.model = str("llm", "model");
  c.temperature = real("llm", "temperature");
  c.max_tokens = static_cast<int>(integer("llm", "max_tokens"));
  c.timeout_seconds = real("llm", "timeout");
  c.retries = static_cast<int>(integer("llm", "retries"));
  c.backoff_seconds = real("llm", "backoff");
  c.concurrency = static_cast<int>(integer("llm", "concurrency"));
  c.samples_per_request = static_cast<int>(integer("llm", "samples_per_request"));
  c.logprobs = flag("llm", "logprobs");
  c.api_key_env = str("llm", "api_key_env");
  try {
    c.validate();
  } catch (const Error& e) {
    throw ConfigError(std::string("llm: ") + e.what());
  }
  return c;
}

std::filesystem::path RunConfig::existing_path(std::string_view section, std::string_view key) const {
  const std::string p = str(section, key);
  const std::string name = std::string(section) + "." + std::string(key);
  if (p.empty()) throw ConfigError(name + " is not set");
  if (!std::filesystem::exists(p)) throw ConfigError(name + ": no such file '" + p + "'");
  return p;
}

proposer::Grammar configured_grammar(const RunConfig& config, tasks::Domain domain) {
  proposer::Grammar g = proposer::default_grammar(domain);
  if (const std::string path = config.str("proposer", "grammar"); !path.empty()) {
    try {
      g = proposer::Grammar(domain, g.start(), proposer::parse_productions(tasks::read_file(path)), g.max_depth());
    } catch (const Error& e) {
      throw ConfigError("proposer.grammar: " + std::string(e.what()));
    }
  }
  if (!config.str("proposer", "fit_seed").empty()) {
    const auto seed = engine::load_seed(config.existing_path("proposer", "fit_seed"), true, config.budget());
    if (seed.domain == domain) {
      const auto programs = seed.programs();
      g = proposer::grammar_fit(g, programs, config.real("proposer", "smoothing")).grammar;
    }
  }
  return g;
}

std::unique_ptr<proposer::Proposer> make_proposer(const RunConfig& config, tasks::Domain domain) {
  const std::string kind = config.str("proposer", "kind");
  if (kind == "grammar") {
    return std::make_unique<proposer::GrammarProposer>(configured_grammar(config, domain),
                                                       static_cast<std::uint64_t>(config.integer("proposer", "seed")));
  }
  if (kind == "llm") return std::make_unique<proposer::LlmProposer>(config.llm_config());
  throw ConfigError("proposer.kind must be 'grammar' or 'llm'");
}

std::string DomainProposer::id() const {
  const std::string kind = config_.str("proposer", "kind");
  return kind == "llm" ? "llm:" + config_.str("llm", "model") : kind;
}

proposer::Proposer& DomainProposer::for_domain(tasks::Domain domain) {
  std::lock_guard lock(mu_);
  auto& slot = by_domain_[static_cast<int>(domain)];
  if (!slot) slot = make_proposer(config_, domain);
  return *slot;
}

std::unique_ptr<proposer::CandidateStream> DomainProposer::propose(const tasks::Task& task, std::size_t k,
                                                                   std::uint64_t nonce) {
  return for_domain(task.domain).propose(task, k, nonce);
}

std::unique_ptr<proposer::CandidateStream> DomainProposer::propose_generation(
    const proposer::GenerationRequest& request, std::size_t k, std::uint64_t nonce) {
  return for_domain(request.domain).propose_generation(request, k, nonce);
}

}  // namespace pbe::cli
