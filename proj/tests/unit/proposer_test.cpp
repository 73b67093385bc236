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

#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "pbe/proposer/default_grammars.hpp"
#include "pbe/proposer/local.hpp"
#include "pbe/proposer/prompt.hpp"
#include "pbe/tasks/io.hpp"

using namespace pbe;
using namespace pbe::proposer;
using nlohmann::json;

namespace {

Task list_task(const std::string& id, std::size_t train = 3) {
  Task t;
  t.id = id;
  t.domain = Domain::List;
  for (std::size_t i = 0; i < train; ++i)
    t.train.push_back({Value::list({Value::integer(static_cast<std::int64_t>(i))}), Value::list({})});
  t.holdout.push_back(t.train.front());
  return t;
}

std::vector<std::string> sources(CandidateStream& s) {
  std::vector<std::string> out;
  for (const auto& c : collect(s)) out.push_back(c.source);
  return out;
}

}  // namespace

TEST_CASE("grammar proposer streams are reproducible") {
  GrammarProposer p(default_grammar(Domain::List), 3);
  const auto a = sources(*p.propose(list_task("a"), 20, 0));
  CHECK(a.size() == 20);
  CHECK(sources(*p.propose(list_task("a"), 20, 0)) == a);
  CHECK(sources(*p.propose(list_task("a"), 20, 1)) != a);
  CHECK(sources(*p.propose(list_task("b"), 20, 0)) != a);
  // the task's examples do not matter, only its id
  CHECK(sources(*p.propose(list_task("a", 7), 20, 0)) == a);
  // a longer stream extends a shorter one
  const auto longer = sources(*p.propose(list_task("a"), 30, 0));
  CHECK(std::equal(a.begin(), a.end(), longer.begin()));
}

TEST_CASE("grammar candidates carry their score") {
  const auto g = default_grammar(Domain::List);
  GrammarProposer p(g, 9);
  auto stream = p.propose(list_task("t"), 10, 0);
  std::size_t index = 0;
  while (auto c = stream->next()) {
    CHECK(c->index == index++);
    CHECK(c->parseable);
    REQUIRE(c->logprob);
    CHECK(*c->logprob == doctest::Approx(grammar_logprob(g, c->source)));
    CHECK(c->proposer_id == p.id());
  }
}

TEST_CASE("stub proposer frequencies") {
  StubProposer stub({{"(lambda xs xs)", 0.3, std::nullopt}}, "(lambda xs (reverse xs))", 1);
  auto stream = stub.propose(list_task("s"), 20'000, 0);
  std::size_t hits = 0;
  while (auto c = stream->next()) hits += c->source == "(lambda xs xs)";
  // sd of the share is about 0.0032
  CHECK(hits / 20'000.0 == doctest::Approx(0.3).epsilon(0.05));
  CHECK_THROWS_AS(StubProposer({{"a", 0.7, {}}, {"b", 0.5, {}}}, "c", 0), Error);
}

TEST_CASE("program extraction") {
  CHECK(extract_program("Here:\n```lisp\n(lambda xs xs)\n```\n") == "(lambda xs xs)");
  CHECK(extract_program("```\n(a)\n```\nthen\n```\n(b)\n```") == "(b)");
  CHECK(extract_program("  (lambda xs xs)  ") == "(lambda xs xs)");
  CHECK(extract_program("```\n(unterminated") == "```\n(unterminated");
}

TEST_CASE("input extraction") {
  const auto lists = extract_inputs(Domain::List, "```\n(p)\n```\n```json\n[1, 2]\n[]\n```\n");
  REQUIRE(lists);
  CHECK(lists->size() == 2);
  CHECK(lists->at(0).repr() == "[1, 2]");
  CHECK_FALSE(extract_inputs(Domain::List, "```json\n[1, \n```"));
  CHECK_FALSE(extract_inputs(Domain::List, "no block"));
  const auto strs = extract_inputs(Domain::String, "```csv\n\"a, b\"\nplain\n\"say \"\"hi\"\"\"\n```");
  REQUIRE(strs);
  CHECK(strs->size() == 3);
  CHECK(strs->at(0).as_str() == "a, b");
  CHECK(strs->at(2).as_str() == "say \"hi\"");
}

TEST_CASE("solve prompts") {
  const auto t = list_task("p", 14);
  const auto prompt = render_prompt(t);
  CHECK(prompt.template_id == "list");
  CHECK(prompt.task_id == "p");
  std::size_t lines = 0, at = 0;
  while ((at = prompt.text.find("assert solve_puzzle(", at)) != std::string::npos) {
    ++lines;
    ++at;
  }
  CHECK(lines == 10);
  CHECK(prompt.text.find("{EXAMPLES}") == std::string::npos);
  CHECK(render_prompt(t).text == prompt.text);
  CHECK_THROWS_AS(render_prompt(t, TemplateId::String), TemplateDomainMismatch);
  CHECK_THROWS_AS(render_prompt(t, TemplateId::GenList), TemplateDomainMismatch);

  tasks::Example e{Value::string("ab"), Value::string("AB")};
  CHECK(assertion_line(Domain::String, e) == "assert edit_text(\"ab\") == \"AB\"");
}

TEST_CASE("generation prompts show every exemplar") {
  GenerationRequest req;
  req.domain = Domain::List;
  req.exemplars.push_back({"(lambda xs (reverse xs))", {Value::list({Value::integer(1)})}, {}});
  req.exemplars.push_back({"(lambda xs (sort xs))", {}, {}});
  const auto p = render_generation_prompt(req);
  CHECK(p.template_id == "gen_list");
  CHECK(p.text.find("(lambda xs (reverse xs))") != std::string::npos);
  CHECK(p.text.find("(lambda xs (sort xs))") != std::string::npos);
  CHECK(p.text.find("```json\n[1]\n```") != std::string::npos);
}
