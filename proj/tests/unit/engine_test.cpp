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
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "pbe/engine/adapt.hpp"
#include "pbe/engine/datagen.hpp"
#include "pbe/engine/input_sampler.hpp"
#include "pbe/engine/solve.hpp"
#include "pbe/proposer/default_grammars.hpp"
#include "pbe/proposer/local.hpp"
#include "pbe/tasks/check.hpp"
#include "pbe/tasks/io.hpp"

using namespace pbe;
using namespace pbe::engine;
using nlohmann::json;
using proposer::StubProposer;

namespace {

Value ints(std::initializer_list<std::int64_t> xs) {
  Value::List out;
  for (auto x : xs) out.push_back(Value::integer(x));
  return Value::list(std::move(out));
}

Task reverse_task(const std::string& id = "rev") {
  Task t;
  t.id = id;
  t.domain = Domain::List;
  t.train = {{ints({1, 2, 3}), ints({3, 2, 1})}, {ints({5, 4}), ints({4, 5})}};
  t.holdout = {{ints({7, 8, 9}), ints({9, 8, 7})}};
  return t;
}

SeedDataset small_seed() {
  SeedDataset seed;
  seed.domain = Domain::List;
  const std::vector<Value> inputs{ints({3, 1, 2}), ints({}), ints({5, 5, -1})};
  for (const char* src : {"(lambda xs (reverse xs))", "(lambda xs (sort xs))", "(lambda xs (map (lambda x (+ x 1)) xs))"})
    seed.entries.push_back(*make_entry(Domain::List, src, inputs));
  return seed;
}

const std::string k_reverse = "(lambda xs (reverse xs))";
const std::string k_identity = "(lambda xs xs)";

}  // namespace

TEST_CASE("solve rejects a zero budget") {
  StubProposer stub({}, k_identity, 0);
  SolveOptions o;
  o.k = 0;
  CHECK_THROWS_AS(solve(reverse_task(), stub, o), Error);
}

TEST_CASE("first-fit stops at the first hit") {
  StubProposer stub({{k_reverse, 0.2, {}}}, k_identity, 4);
  SolveOptions o;
  o.k = 1000;
  const auto r = solve(reverse_task(), stub, o);
  REQUIRE(r.solved());
  CHECK(r.satisfying.size() == 1);
  CHECK(r.samples_drawn == *r.first_hit);
  CHECK(r.satisfying[0].index + 1 == *r.first_hit);
  CHECK(r.satisfying[0].generalizes);
  CHECK(r.selected == 0u);
}

TEST_CASE("exhaustive draws the whole budget") {
  StubProposer stub({{k_reverse, 0.2, {}}, {"(lambda xs", 0.1, {}}}, k_identity, 4);
  SolveOptions o;
  o.k = 500;
  o.stop = SolveOptions::Stop::Exhaustive;
  const auto r = solve(reverse_task(), stub, o);
  CHECK(r.samples_drawn == 500);
  CHECK(r.satisfying.size() > 50);
  CHECK(r.unparseable > 20);
  REQUIRE(r.selected);
  CHECK(*r.selected < r.satisfying.size());
  for (std::size_t i = 1; i < r.satisfying.size(); ++i) CHECK(r.satisfying[i - 1].index < r.satisfying[i].index);

  o.select = SolveOptions::Select::First;
  CHECK(solve(reverse_task(), stub, o).selected == 0u);
}

TEST_CASE("unsolved tasks report no selection") {
  StubProposer stub({}, k_identity, 0);
  SolveOptions o;
  o.k = 30;
  const auto r = solve(reverse_task(), stub, o);
  CHECK_FALSE(r.solved());
  CHECK_FALSE(r.first_hit);
  CHECK_FALSE(r.selected);
  CHECK(r.samples_drawn == 30);
}

TEST_CASE("solve_all is independent of thread count") {
  std::vector<Task> tasks;
  for (int i = 0; i < 12; ++i) tasks.push_back(reverse_task("t" + std::to_string(i)));
  proposer::GrammarProposer grammar(proposer::default_grammar(Domain::List), 8);
  SolveOptions o;
  o.k = 200;
  o.stop = SolveOptions::Stop::Exhaustive;
  const auto a = solve_all(tasks, grammar, o, 1);
  const auto b = solve_all(tasks, grammar, o, 6);
  REQUIRE(a.size() == tasks.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].task_id == tasks[i].id);
    CHECK(tasks::result_to_json(a[i]) == tasks::result_to_json(b[i]));
  }
}

TEST_CASE("input sampler respects its ranges") {
  Rng rng(3);
  ListInputConfig lc;
  lc.min_len = 2;
  lc.max_len = 4;
  lc.min_value = -3;
  lc.max_value = 3;
  for (int i = 0; i < 200; ++i) {
    const auto v = sample_list_input(rng, lc);
    REQUIRE(v.is_list());
    CHECK(v.as_list().size() >= 2);
    CHECK(v.as_list().size() <= 4);
    for (const auto& x : v.as_list()) CHECK(std::abs(x.as_int()) <= 3);
    const auto s = sample_string_input(rng);
    REQUIRE(s.is_str());
    CHECK_FALSE(s.as_str().empty());
  }
  InputConfig ic;
  ic.count = 7;
  CHECK(sample_inputs(Domain::String, rng, ic).size() == 7);
  CHECK(sample_inputs(Domain::Logo, rng, ic).empty());
}

TEST_CASE("seed entries execute and verify") {
  const auto e = make_entry(Domain::List, "(lambda  xs (sort xs))", std::vector{ints({2, 1})});
  REQUIRE(e);
  CHECK(e->program == "(lambda xs (sort xs))");
  CHECK(std::get<Value>(e->outputs[0]) == ints({1, 2}));
  CHECK(verify_entry(Domain::List, *e));
  auto tampered = *e;
  tampered.outputs[0] = ints({2, 1});
  CHECK_FALSE(verify_entry(Domain::List, tampered));
  CHECK_FALSE(make_entry(Domain::List, "(lambda xs (head xs))", std::vector{ints({})}));
  CHECK_FALSE(make_entry(Domain::List, "(lambda xs (lambda y y))", std::vector{ints({})}));  // a function

  const auto logo = make_entry(Domain::Logo, "(loop 4 (forward 100) (left 90))", {});
  REQUIRE(logo);
  CHECK(logo->outputs.size() == 1);
  CHECK(std::holds_alternative<tasks::AsciiGrid>(logo->outputs[0]));
  EvalBudget tight;
  tight.fuel = 3;
  CHECK_FALSE(make_entry(Domain::Logo, "(loop 4 (forward 100) (left 90))", {}, {}, tight));
}

TEST_CASE("seed files round trip") {
  auto seed = small_seed();
  seed.entries[1].provenance = Provenance::adapted(2);
  seed.entries[1].origin = "task-9";
  const auto text = seed_to_jsonl(seed);
  CHECK(json::parse(text.substr(0, text.find('\n')))["schema"] == "pbe.seed");
  const auto back = parse_seed(text);
  REQUIRE(back.size() == 3);
  CHECK(back.entries[1].provenance == Provenance::adapted(2));
  CHECK(back.entries[1].origin == "task-9");
  CHECK(seed_to_jsonl(back) == text);

  const auto path = std::filesystem::temp_directory_path() / "pbe_engine_seed.jsonl";
  save_seed(path, seed);
  CHECK(load_seed(path).size() == 3);
  std::filesystem::remove(path);

  std::string broken = text;
  broken.replace(broken.find("[2,1,3]"), 7, "[0,0,0]");
  CHECK_THROWS_AS(parse_seed(broken), InvalidSeed);
  CHECK_NOTHROW(parse_seed(broken, false));
  CHECK_THROWS_AS(parse_seed("{\"schema\":\"other\"}\n"), InvalidSeed);
}

TEST_CASE("entry tasks check their own program") {
  const auto seed = small_seed();
  const auto t = entry_task(Domain::List, seed.entries[0]);
  CHECK(t.train.size() == 3);
  CHECK(tasks::check_fit(tasks::parse_program(Domain::List, seed.entries[0].program), t));
  CHECK(to_exemplar(seed.entries[0]).outputs.size() == 3);
}

TEST_CASE("datagen keeps verified, distinct records") {
  const auto seed = small_seed();
  proposer::GrammarProposer grammar(proposer::default_grammar(Domain::List), 2);
  DatagenOptions o;
  o.n = 40;
  o.seed = 1;
  const auto data = generate_tune_dataset(seed, grammar, o);
  REQUIRE(data.records.size() == 40);
  std::set<std::string> programs;
  for (const auto& r : data.records) {
    programs.insert(r.program);
    CHECK(verify_entry(Domain::List, {r.program, r.inputs, r.outputs, {}, {}}));
    CHECK(r.completion == "```\n" + r.program + "\n```");
    CHECK(r.prompt.find("assert solve_puzzle(") != std::string::npos);
    CHECK(r.meta.at("domain") == "list");
  }
  CHECK(programs.size() == 40);
  CHECK(data.attempts >= data.records.size() + data.rejected_parse + data.rejected_exec + data.rejected_duplicate);
  CHECK(tune_to_jsonl(generate_tune_dataset(seed, grammar, o)) == tune_to_jsonl(data));

  const auto lines = tune_to_jsonl(data);
  const auto first = json::parse(lines.substr(0, lines.find('\n')));
  CHECK(first.contains("prompt"));
  CHECK(first.contains("completion"));
  CHECK(first["meta"]["program"] == data.records[0].program);
  CHECK(first["meta"]["inputs"].size() == data.records[0].inputs.size());
}

TEST_CASE("dedup modes") {
  const auto seed = small_seed();
  StubProposer stub({{k_reverse, 0.5, {}}}, "(lambda xs (sort xs))", 6);
  DatagenOptions o;
  o.n = 6;
  o.dedup = DedupMode::None;
  CHECK(generate_tune_dataset(seed, stub, o).records.size() == 6);

  o.n = 2;
  o.dedup = DedupMode::Program;
  const auto two = generate_tune_dataset(seed, stub, o);
  CHECK(two.records.size() == 2);
  CHECK(two.records[0].program != two.records[1].program);

  CHECK(parse_dedup(dedup_name(DedupMode::ProgramAndInputs)) == DedupMode::ProgramAndInputs);
  CHECK_THROWS_AS(parse_dedup("fuzzy"), Error);
}

TEST_CASE("datagen proposer-supplied inputs win") {
  const std::vector<Value> given{ints({9, 8}), ints({1})};
  StubProposer stub({{k_reverse, 1.0, given}}, k_identity, 0);
  DatagenOptions o;
  o.n = 1;
  const auto data = generate_tune_dataset(small_seed(), stub, o);
  REQUIRE(data.records.size() == 1);
  CHECK(data.records[0].inputs == given);
}

TEST_CASE("datagen stalls on a hopeless proposer") {
  StubProposer stub({}, "(lambda xs (head (range 0)))", 0);
  DatagenOptions o;
  o.n = 5;
  o.stall_window = 200;
  CHECK_THROWS_AS(generate_tune_dataset(small_seed(), stub, o), GenerationStalled);
  CHECK_THROWS_AS(generate_tune_dataset(SeedDataset{}, stub, o), Error);
  CHECK(default_shots(Domain::List) == 4);
  CHECK(default_shots(Domain::String) == 10);
  CHECK(default_shots(Domain::Logo) == 6);
}

TEST_CASE("seed_to_tune emits every entry") {
  const auto seed = small_seed();
  const auto data = seed_to_tune(seed);
  REQUIRE(data.records.size() == seed.size());
  CHECK(data.records[1].program == seed.entries[1].program);
}

TEST_CASE("adapt grows the seed from solved tasks") {
  const std::vector<Task> tasks{reverse_task("a"), reverse_task("b")};
  auto hook = [](const SeedDataset&, int) -> std::unique_ptr<proposer::Proposer> {
    return std::make_unique<StubProposer>(std::vector<StubProposer::Choice>{{k_reverse, 0.5, {}}},
                                          "(lambda xs (reverse (reverse (reverse xs))))", 1);
  };
  AdaptOptions o;
  o.k = 20;
  auto trace = adapt(small_seed(), tasks, hook, o);
  REQUIRE(trace.rounds.size() == 2);  // round 1 has nothing left to solve
  CHECK(trace.rounds[0].cumulative_solved == 2);
  CHECK(trace.rounds[0].newly_solved == std::vector<std::string>{"a", "b"});
  CHECK(trace.rounds[0].seed_after == 3 + 4);  // two distinct programs per task
  CHECK(trace.rounds[0].samples_drawn == 40);
  CHECK(trace.rounds[1].samples_drawn == 0);
  CHECK(trace.seed.entries.back().provenance == Provenance::adapted(0));
  CHECK(trace.seed.entries.back().origin == "b");

  o.one_per_task = true;
  trace = adapt(small_seed(), tasks, hook, o);
  CHECK(trace.rounds[0].seed_after == 3 + 2);
  CHECK(trace.seed.entries.back().program == k_reverse);  // the shorter one

  o.round_ceiling = 25;
  trace = adapt(small_seed(), tasks, hook, o);
  CHECK(trace.rounds[0].samples_drawn == 25);
}

TEST_CASE("adapt survives a failing train hook") {
  const std::vector<Task> tasks{reverse_task()};
  auto hook = [](const SeedDataset&, int round) -> std::unique_ptr<proposer::Proposer> {
    if (round == 0) throw TrainHookFailure("trainer not ready");
    return std::make_unique<StubProposer>(std::vector<StubProposer::Choice>{{k_reverse, 1.0, {}}}, k_identity, 0);
  };
  AdaptOptions o;
  o.k = 5;
  const auto trace = adapt(small_seed(), tasks, hook, o);
  REQUIRE(trace.rounds.size() >= 2);
  CHECK(trace.rounds[0].aborted);
  CHECK(trace.rounds[0].seed_after == trace.rounds[0].seed_before);
  CHECK(trace.rounds[1].cumulative_solved == 1);

  const auto jsonl = trace_to_jsonl(trace, json{{"config_hash", "x"}});
  const auto header = json::parse(jsonl.substr(0, jsonl.find('\n')));
  CHECK(header["schema"] == "pbe.adapt_trace");
  CHECK(header["config_hash"] == "x");
  CHECK(adapt_round_to_json(trace.rounds[0])["aborted"] == true);

  o.k = 0;
  CHECK_THROWS_AS(adapt(small_seed(), tasks, hook, o), Error);
}

TEST_CASE("adapt stops when idle") {
  const std::vector<Task> tasks{reverse_task()};
  auto hook = [](const SeedDataset&, int) -> std::unique_ptr<proposer::Proposer> {
    return std::make_unique<StubProposer>(std::vector<StubProposer::Choice>{}, k_identity, 0);
  };
  AdaptOptions o;
  o.k = 5;
  o.rounds = 4;
  CHECK(adapt(small_seed(), tasks, hook, o).rounds.size() == 1);
  o.stop_when_idle = false;
  CHECK(adapt(small_seed(), tasks, hook, o).rounds.size() == 4);
}

TEST_CASE("grammar train hook refits on the seed") {
  const auto base = proposer::default_grammar(Domain::List);
  auto hook = grammar_train_hook(base, 1);
  auto p = hook(small_seed(), 0);
  auto* g = dynamic_cast<proposer::GrammarProposer*>(p.get());
  REQUIRE(g);
  CHECK(g->grammar().snapshot_id() != base.snapshot_id());
  SeedDataset strings;
  strings.domain = Domain::String;
  CHECK_THROWS_AS(hook(strings, 0), TrainHookFailure);
}
