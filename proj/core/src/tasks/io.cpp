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

#include "pbe/tasks/io.hpp"

#include <fstream>
#include <sstream>

namespace pbe::tasks {

using nlohmann::json;

namespace {

json example_to_json(const Example& e) {
  json j = json::object();
  if (e.input) j["in"] = minilang::to_json(*e.input);
  if (const auto* g = std::get_if<AsciiGrid>(&e.output)) j["out"] = g->text();
  else j["out"] = minilang::to_json(std::get<Value>(e.output));
  return j;
}

Example example_from_json(const json& j, Domain domain) {
  if (!j.is_object() || !j.contains("out")) throw InvalidTask("example must be an object with \"out\"");
  Example e;
  if (domain == Domain::Logo) {
    if (!j["out"].is_string()) throw InvalidTask("logo output must be grid text");
    e.output = AsciiGrid::from_text(j["out"].get<std::string>());
  } else {
    e.output = minilang::value_from_json(j["out"]);
    if (!j.contains("in")) throw InvalidTask("example needs \"in\"");
    e.input = minilang::value_from_json(j["in"]);
  }
  return e;
}

}  // namespace

json task_to_json(const Task& task) {
  json j;
  j["id"] = task.id;
  j["domain"] = domain_name(task.domain);
  j["train"] = json::array();
  for (const auto& e : task.train) j["train"].push_back(example_to_json(e));
  j["holdout"] = json::array();
  for (const auto& e : task.holdout) j["holdout"].push_back(example_to_json(e));
  if (task.match.kind == Match::Kind::Grid) j["match"] = {{"kind", "grid"}, {"threshold", task.match.threshold}};
  else j["match"] = {{"kind", "exact"}};
  return j;
}

Task task_from_json(const json& j) {
  Task t;
  try {
    if (!j.is_object()) throw InvalidTask("task must be a JSON object");
    t.id = j.at("id").get<std::string>();
    t.domain = parse_domain(j.at("domain").get<std::string>());
    for (const auto& e : j.at("train")) t.train.push_back(example_from_json(e, t.domain));
    if (j.contains("holdout"))
      for (const auto& e : j["holdout"]) t.holdout.push_back(example_from_json(e, t.domain));
    if (j.contains("match")) {
      const auto& m = j["match"];
      const std::string kind = m.at("kind").get<std::string>();
      if (kind == "grid") t.match = Match::grid(m.value("threshold", 0));
      else if (kind != "exact") throw InvalidTask("unknown match kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw InvalidTask(std::string("malformed task: ") + e.what());
  } catch (const InvalidTask&) {
    throw;
  } catch (const Error& e) {
    throw InvalidTask(std::string("malformed task: ") + e.what());
  }
  t.validate();
  return t;
}

std::vector<Task> parse_tasks(std::string_view jsonl) {
  std::vector<Task> out;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    try {
      out.push_back(task_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw InvalidTask("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const InvalidTask& e) {
      throw InvalidTask("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Task> load_tasks(const std::filesystem::path& path) { return parse_tasks(read_file(path)); }

std::string tasks_to_jsonl(const std::vector<Task>& tasks) {
  std::string out;
  for (const auto& t : tasks) out += task_to_json(t).dump() + "\n";
  return out;
}

json result_to_json(const SolveResult& r) {
  json j;
  j["task_id"] = r.task_id;
  j["samples_drawn"] = r.samples_drawn;
  j["unparseable"] = r.unparseable;
  j["first_hit"] = r.first_hit ? json(*r.first_hit) : json(nullptr);
  j["selected"] = r.selected ? json(*r.selected) : json(nullptr);
  j["satisfying"] = json::array();
  for (const auto& s : r.satisfying) {
    json c;
    c["index"] = s.index;
    c["source"] = s.source;
    c["generalizes"] = s.generalizes;
    if (s.logprob) c["logprob"] = *s.logprob;
    if (s.distance) c["distance"] = *s.distance;
    j["satisfying"].push_back(std::move(c));
  }
  return j;
}

SolveResult result_from_json(const json& j) {
  SolveResult r;
  r.task_id = j.at("task_id").get<std::string>();
  r.samples_drawn = j.at("samples_drawn").get<std::size_t>();
  r.unparseable = j.value("unparseable", std::size_t{0});
  if (j.contains("first_hit") && !j["first_hit"].is_null()) r.first_hit = j["first_hit"].get<std::size_t>();
  if (j.contains("selected") && !j["selected"].is_null()) r.selected = j["selected"].get<std::size_t>();
  for (const auto& c : j.at("satisfying")) {
    SolvedProgram s;
    s.index = c.at("index").get<std::size_t>();
    s.source = c.at("source").get<std::string>();
    s.generalizes = c.at("generalizes").get<bool>();
    if (c.contains("logprob")) s.logprob = c["logprob"].get<double>();
    if (c.contains("distance")) s.distance = c["distance"].get<int>();
    r.satisfying.push_back(std::move(s));
  }
  return r;
}

json report_to_json(const MetricsReport& report) {
  json j;
  j["tasks"] = report.tasks;
  j["generalization_accuracy"] = report.generalization_accuracy;
  j["oracle_accuracy"] = report.oracle_accuracy ? json(*report.oracle_accuracy) : json(nullptr);
  j["rows"] = json::array();
  for (const auto& r : report.rows)
    j["rows"].push_back({{"task_id", r.task_id}, {"solved", r.solved}, {"generalizes", r.generalizes}, {"oracle", r.oracle}});
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace pbe::tasks
