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

#include "pbe/engine/datasets.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "pbe/tasks/io.hpp"

namespace pbe::engine {

using nlohmann::json;

std::vector<std::string> SeedDataset::programs() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.program);
  return out;
}

std::optional<Output> execute(const tasks::Program& program, Domain domain, const std::optional<Value>& input,
                              const EvalBudget& budget) {
  if (domain == Domain::Logo) {
    const auto* p = std::get_if<turtle::Program>(&program);
    if (!p) return std::nullopt;
    turtle::RenderOptions options;
    options.step_cap = static_cast<std::size_t>(std::max<std::int64_t>(1, budget.fuel));
    try {
      return Output(turtle::render_ascii(*p, options));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  const auto* tree = std::get_if<minilang::SyntaxTree>(&program);
  if (!tree || tree->empty() || !input) return std::nullopt;
  auto outcome = minilang::eval(*tree, *input, budget);
  if (!outcome.ok() || !outcome.value.is_data()) return std::nullopt;
  return Output(std::move(outcome.value));
}

std::optional<SeedEntry> make_entry(Domain domain, std::string_view source, std::span<const Value> inputs,
                                    Provenance provenance, const EvalBudget& budget) {
  const auto program = tasks::try_parse_program(domain, source);
  if (!program) return std::nullopt;
  SeedEntry entry;
  entry.program = tasks::print_program(*program);
  entry.provenance = provenance;
  if (domain == Domain::Logo) {
    auto out = execute(*program, domain, std::nullopt, budget);
    if (!out) return std::nullopt;
    entry.outputs.push_back(std::move(*out));
    return entry;
  }
  for (const auto& x : inputs) {
    auto out = execute(*program, domain, x, budget);
    if (!out) return std::nullopt;
    entry.inputs.push_back(x);
    entry.outputs.push_back(std::move(*out));
  }
  return entry;
}

bool verify_entry(Domain domain, const SeedEntry& entry, const EvalBudget& budget) {
  const auto program = tasks::try_parse_program(domain, entry.program);
  if (!program) return false;
  if (domain == Domain::Logo) {
    if (!entry.inputs.empty() || entry.outputs.size() != 1) return false;
    const auto out = execute(*program, domain, std::nullopt, budget);
    return out && *out == entry.outputs[0];
  }
  if (entry.inputs.size() != entry.outputs.size()) return false;
  for (std::size_t i = 0; i < entry.inputs.size(); ++i) {
    const auto out = execute(*program, domain, entry.inputs[i], budget);
    if (!out || !(*out == entry.outputs[i])) return false;
  }
  return true;
}

proposer::Exemplar to_exemplar(const SeedEntry& entry) {
  proposer::Exemplar ex;
  ex.program = entry.program;
  ex.inputs = entry.inputs;
  for (const auto& o : entry.outputs)
    if (const auto* v = std::get_if<Value>(&o)) ex.outputs.push_back(*v);
  return ex;
}

Task entry_task(Domain domain, const SeedEntry& entry, std::string id) {
  Task t;
  t.id = std::move(id);
  t.domain = domain;
  for (std::size_t i = 0; i < entry.outputs.size(); ++i) {
    tasks::Example e;
    if (domain != Domain::Logo) e.input = entry.inputs.at(i);
    e.output = entry.outputs[i];
    t.train.push_back(std::move(e));
  }
  return t;
}

json seed_entry_to_json(Domain domain, const SeedEntry& entry) {
  json j;
  j["program"] = entry.program;
  j["inputs"] = json::array();
  for (const auto& v : entry.inputs) j["inputs"].push_back(minilang::to_json(v));
  j["outputs"] = json::array();
  for (const auto& o : entry.outputs) {
    if (const auto* g = std::get_if<tasks::AsciiGrid>(&o)) j["outputs"].push_back(g->text());
    else j["outputs"].push_back(minilang::to_json(std::get<Value>(o)));
  }
  if (entry.provenance.kind == Provenance::Kind::Manual) j["provenance"] = "manual";
  else j["provenance"] = {{"adapted", entry.provenance.round}};
  if (!entry.origin.empty()) j["origin"] = entry.origin;
  (void)domain;
  return j;
}

std::string seed_to_jsonl(const SeedDataset& seed) {
  std::string out =
      json{{"schema", "pbe.seed"}, {"version", k_seed_schema_version}, {"domain", tasks::domain_name(seed.domain)}}
          .dump() +
      "\n";
  for (const auto& e : seed.entries) out += seed_entry_to_json(seed.domain, e).dump() + "\n";
  return out;
}

namespace {

SeedEntry entry_from_json(Domain domain, const json& j) {
  SeedEntry e;
  e.program = j.at("program").get<std::string>();
  for (const auto& v : j.value("inputs", json::array())) e.inputs.push_back(minilang::value_from_json(v));
  for (const auto& o : j.at("outputs")) {
    if (domain == Domain::Logo) e.outputs.emplace_back(tasks::AsciiGrid::from_text(o.get<std::string>()));
    else e.outputs.emplace_back(minilang::value_from_json(o));
  }
  if (j.contains("provenance")) {
    const json& p = j["provenance"];
    if (p.is_object() && p.contains("adapted")) e.provenance = Provenance::adapted(p["adapted"].get<int>());
    else if (!(p.is_string() && p.get<std::string>() == "manual")) throw InvalidSeed("unknown provenance");
  }
  e.origin = j.value("origin", "");
  if (domain != Domain::Logo && e.inputs.size() != e.outputs.size())
    throw InvalidSeed("inputs and outputs differ in length");
  return e;
}

}  // namespace

SeedDataset parse_seed(std::string_view jsonl, bool verify, const EvalBudget& budget) {
  SeedDataset seed;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= jsonl.size()) {
    auto end = jsonl.find('\n', pos);
    if (end == std::string_view::npos) end = jsonl.size();
    std::string_view line = jsonl.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    const std::string where = "seed line " + std::to_string(line_no) + ": ";
    try {
      const json j = json::parse(line);
      if (!header) {
        if (j.value("schema", "") != "pbe.seed") throw InvalidSeed(where + "missing pbe.seed header");
        if (j.value("version", 0) != k_seed_schema_version)
          throw InvalidSeed(where + "unsupported seed version " + j.value("version", json()).dump());
        seed.domain = tasks::parse_domain(j.at("domain").get<std::string>());
        header = true;
        continue;
      }
      SeedEntry e = entry_from_json(seed.domain, j);
      if (verify && !verify_entry(seed.domain, e, budget))
        throw InvalidSeed(where + "program does not reproduce its outputs: " + e.program);
      seed.entries.push_back(std::move(e));
    } catch (const InvalidSeed&) {
      throw;
    } catch (const std::exception& ex) {
      throw InvalidSeed(where + ex.what());
    }
  }
  if (!header) throw InvalidSeed("seed file is empty");
  return seed;
}

SeedDataset load_seed(const std::filesystem::path& path, bool verify, const EvalBudget& budget) {
  return parse_seed(tasks::read_file(path), verify, budget);
}

void save_seed(const std::filesystem::path& path, const SeedDataset& seed) {
  tasks::write_file(path, seed_to_jsonl(seed));
}

}  // namespace pbe::engine
