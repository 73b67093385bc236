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

#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "pbe/cli/commands.hpp"
#include "pbe/cli/server.hpp"
#include "pbe/engine/datasets.hpp"
#include "pbe/tasks/io.hpp"
#include "pbe/turtle/ascii.hpp"

namespace fs = std::filesystem;
using namespace pbe;
using namespace pbe::cli;
using nlohmann::json;

namespace {

const fs::path k_lambda2 = fs::path(PBE_FIXTURE_DIR) / "lambda2.jsonl";

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("pbe_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Run {
  int rc = 0;
  std::string out, err;
};

Run pbe_run(std::vector<std::string> args) {
  args.insert(args.begin(), "pbe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.rc = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<json> jsonl(const fs::path& p) {
  std::vector<json> out;
  std::istringstream in(tasks::read_file(p));
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

json task_json(const std::string& id) {
  json j = tasks::task_to_json(tasks::load_tasks(k_lambda2).at(1));  // reverse
  j["id"] = id;
  return j;
}

}  // namespace

TEST_CASE("config defaults, files and overrides") {
  RunConfig c;
  CHECK(c.integer("budget", "k") == 256);
  CHECK(c.str("proposer", "kind") == "grammar");

  auto t = RunConfig::from_toml("[budget]\nk = 64\n[llm]\ntemperature = 1\n[solve]\nstop = \"exhaustive\"\n");
  CHECK(t.count("budget", "k") == 64);
  CHECK(t.real("llm", "temperature") == 1.0);  // integer accepted for a float
  CHECK(t.solve_options().stop == engine::SolveOptions::Stop::Exhaustive);

  t.set("budget.k=8");
  t.set("solve.tasks=2024");  // a string slot keeps the raw text
  t.set("adapt.one_per_task=true");
  CHECK(t.solve_options().k == 8);
  CHECK(t.str("solve", "tasks") == "2024");
  CHECK(t.flag("adapt", "one_per_task"));

  CHECK_THROWS_AS(RunConfig::from_toml("[budget]\nkk = 1\n"), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_toml("[budget]\nk = \"many\"\n"), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_toml("[budget\n"), ConfigError);
  CHECK_THROWS_AS(t.set("nosection.k=1"), ConfigError);
  CHECK_THROWS_AS(t.set("budget.k"), ConfigError);
  t.set("budget.k=-1");
  CHECK_THROWS_AS(t.count("budget", "k"), ConfigError);
}

TEST_CASE("config hash ignores where outputs go") {
  RunConfig a, b;
  b.set("output.dir=elsewhere");
  b.set("serve.port=9");
  b.set("solve.threads=3");
  CHECK(a.hash() == b.hash());
  b.set("proposer.seed=1");
  CHECK(a.hash() != b.hash());
  CHECK(a.seeds().contains("proposer"));
}

TEST_CASE("typed views validate ranges") {
  RunConfig c;
  c.set("solve.stop=sometimes");
  CHECK_THROWS_AS(c.solve_options(), ConfigError);
  c = RunConfig();
  c.set("llm.temperature=0");
  CHECK_THROWS_AS(c.llm_config(), ConfigError);
  c = RunConfig();
  c.set("gen.dedup=program_and_inputs");
  CHECK(c.datagen_options().dedup == engine::DedupMode::ProgramAndInputs);
  CHECK_THROWS_AS(c.existing_path("solve", "tasks"), ConfigError);
}

TEST_CASE("pbe solve writes results, timings and metrics") {
  TempDir dir("solve");
  const auto r = pbe_run({"-o", dir.path.string(), "solve", "--tasks", k_lambda2.string(), "-k", "64"});
  REQUIRE(r.rc == k_exit_ok);
  CHECK(r.out.find("tasks 10") != std::string::npos);
  const auto lines = jsonl(dir.path / "results.jsonl");
  REQUIRE(lines.size() == 11);
  CHECK(lines[0]["schema"] == "pbe.results");
  CHECK(lines[0]["version"] == k_output_schema_version);
  CHECK(lines[0]["config_hash"].is_string());
  CHECK(lines[0]["k"] == 64);
  CHECK(lines[1]["task_id"] == "lambda2-dedup");
  CHECK(jsonl(dir.path / "timings.jsonl").size() >= 10);
  const auto metrics = json::parse(tasks::read_file(dir.path / "metrics.json"));
  CHECK(metrics["report"]["tasks"] == 10);
  CHECK(metrics["config_hash"] == lines[0]["config_hash"]);
}

TEST_CASE("pbe exit codes") {
  CHECK(pbe_run({"solve"}).rc == k_exit_config);
  CHECK(pbe_run({"solve", "--tasks", "/nonexistent/tasks.jsonl"}).rc == k_exit_config);
  CHECK(pbe_run({"--set", "budget.nope=1", "solve"}).rc == k_exit_config);
  CHECK(pbe_run({"--frobnicate"}).rc == k_exit_config);
  const auto v = pbe_run({"version"});
  CHECK(v.rc == k_exit_ok);
  CHECK(v.out.find(std::string(k_version)) != std::string::npos);

  TempDir dir("empty");
  tasks::write_file(dir.path / "none.jsonl", "# nothing here\n");
  CHECK(pbe_run({"-o", dir.path.string(), "solve", "--tasks", (dir.path / "none.jsonl").string()}).rc ==
        k_exit_config);

  // An unreachable LLM endpoint maps to its own exit code.
  const auto llm = pbe_run({"-o", dir.path.string(), "--set", "proposer.kind=llm", "--set",
                            "llm.endpoint=http://127.0.0.1:1/v1", "--set", "llm.retries=0", "solve", "--tasks",
                            k_lambda2.string(), "-k", "2"});
  CHECK(llm.rc == k_exit_endpoint);
}

TEST_CASE("pbe gen, adapt and analyze") {
  TempDir dir("pipeline");
  engine::SeedDataset seed;
  for (const char* src : {"(lambda xs (reverse xs))", "(lambda xs (sort xs))", "(lambda xs (unique xs))"}) {
    const std::vector<tasks::Value> in{minilang::value_from_json(json::array({3, 1, 3})),
                                       minilang::value_from_json(json::array({5, -2}))};
    seed.entries.push_back(*engine::make_entry(tasks::Domain::List, src, in));
  }
  const auto seed_path = dir.path / "seed.jsonl";
  engine::save_seed(seed_path, seed);

  const auto gen = pbe_run({"-o", dir.path.string(), "gen", "--seed-file", seed_path.string(), "-n", "12"});
  REQUIRE(gen.rc == k_exit_ok);
  CHECK(jsonl(dir.path / "tune.jsonl").size() == 12);
  CHECK(jsonl(dir.path / "tune.jsonl")[0]["meta"].contains("config_hash"));

  const auto adapt = pbe_run({"-o", dir.path.string(), "adapt", "--seed-file", seed_path.string(), "-t",
                              k_lambda2.string(), "-r", "2", "-k", "64"});
  REQUIRE(adapt.rc == k_exit_ok);
  const auto trace = jsonl(dir.path / "adapt_trace.jsonl");
  CHECK(trace[0]["schema"] == "pbe.adapt_trace");
  CHECK(trace.size() >= 2);
  CHECK(engine::load_seed(dir.path / "seed_final.jsonl").size() >= seed.size());

  REQUIRE(pbe_run({"-o", dir.path.string(), "solve", "--tasks", k_lambda2.string(), "-k", "256"}).rc == k_exit_ok);
  const auto analyze = pbe_run({"-o", dir.path.string(), "analyze", "-t", k_lambda2.string(), "--results",
                                (dir.path / "results.jsonl").string(), "--trials", "2", "--k-cap", "64"});
  REQUIRE(analyze.rc == k_exit_ok);
  const auto csv = tasks::read_file(dir.path / "difficulty.csv");
  CHECK(csv.rfind("# {", 0) == 0);
  CHECK(csv.find("task_id,size,prior_dl,posterior_dl,solve_rate,expected_budget") != std::string::npos);
  CHECK(fs::exists(dir.path / "difficulty_summary.txt"));
}

TEST_CASE("service handlers") {
  TempDir dir("service");
  RunConfig config;
  config.set("serve.feedback", (dir.path / "fb.jsonl").string());
  Service svc(config);

  const auto health = svc.health();
  CHECK(health.status == 200);
  CHECK(health.body["status"] == "ok");
  CHECK(health.body["schema_version"] == 1);

  CHECK(svc.solve("{not json").status == 400);
  CHECK(svc.solve("[]").status == 400);
  CHECK(svc.solve(json{{"task", {{"id", "x"}}}}.dump()).status == 400);
  CHECK(svc.solve(json{{"task", task_json("r")}, {"k", 0}}.dump()).status == 400);

  const auto solved = svc.solve(json{{"task", task_json("r")}, {"k", 512}}.dump());
  REQUIRE(solved.status == 200);
  CHECK(solved.body["result"]["task_id"] == "r");
  CHECK(solved.body["candidates"].is_array());

  const json good{{"task", task_json("r")}, {"program", "(lambda xs (reverse xs))"}};
  auto fb = svc.feedback(good.dump());
  CHECK(fb.status == 200);
  CHECK(fb.body["appended"] == true);
  CHECK(svc.feedback(good.dump()).body["appended"] == false);
  CHECK(svc.feedback(json{{"task", task_json("r")}, {"program", "(lambda xs xs)"}}.dump()).status == 422);
  CHECK(svc.feedback(json{{"task", task_json("r")}, {"program", "(lambda"}}.dump()).status == 422);
  CHECK(jsonl(dir.path / "fb.jsonl").size() == 1);

  // a restarted service remembers what it has accepted
  Service again(config);
  CHECK(again.feedback(good.dump()).body["appended"] == false);

  turtle::BitCanvas canvas(512, 512, true);
  const auto pgm = turtle::write_pgm(canvas);
  const auto b64 = base64_encode(std::span(reinterpret_cast<const std::uint8_t*>(pgm.data()), pgm.size()));
  const auto ascii = svc.logo_ascii(json{{"pgm", b64}}.dump());
  REQUIRE(ascii.status == 200);
  CHECK(ascii.body["grid"].get<std::string>().substr(0, 32) == std::string(32, '9'));
  CHECK(svc.logo_ascii(json{{"pgm", "!!"}}.dump()).status == 400);
}

TEST_CASE("logo candidates come back with their grid") {
  RunConfig config;
  Service svc(config);
  tasks::Task t;
  t.id = "pen";
  t.domain = tasks::Domain::Logo;
  t.train.push_back({std::nullopt, turtle::AsciiGrid()});  // a blank canvas
  t.match = tasks::Match::grid(0);
  const auto r = svc.solve(json{{"task", tasks::task_to_json(t)}, {"k", 256}}.dump());
  REQUIRE(r.status == 200);
  REQUIRE_FALSE(r.body["candidates"].empty());
  CHECK(r.body["candidates"][0]["grid"] == turtle::AsciiGrid().text());
}

TEST_CASE("http server routes") {
  TempDir dir("http");
  RunConfig config;
  config.set("serve.feedback", (dir.path / "fb.jsonl").string());
  config.set("serve.workers=2");
  Server server(config);
  const int port = server.bind("127.0.0.1", 0);
  std::thread loop([&] { server.listen(); });

  httplib::Client client("127.0.0.1", port);
  httplib::Result health;
  for (int i = 0; i < 100 && !(health = client.Get("/health")); ++i)
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(json::parse(health->body)["schema_version"] == 1);

  const auto bad = client.Post("/solve", "nope", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  const auto solved = client.Post("/solve", json{{"task", task_json("h")}, {"k", 32}}.dump(), "application/json");
  REQUIRE(solved);
  CHECK(solved->status == 200);
  const auto fb = client.Post("/adapt/feedback",
                              json{{"task", task_json("h")}, {"program", "(lambda xs (reverse xs))"}}.dump(),
                              "application/json");
  REQUIRE(fb);
  CHECK(fb->status == 200);
  CHECK(client.Get("/missing")->status == 404);

  server.stop();
  loop.join();
}
