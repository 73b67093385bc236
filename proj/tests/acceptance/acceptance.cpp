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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "pbe/analytics/correlate.hpp"
#include "pbe/analytics/difficulty.hpp"
#include "pbe/engine/adapt.hpp"
#include "pbe/engine/datagen.hpp"
#include "pbe/engine/input_sampler.hpp"
#include "pbe/engine/solve.hpp"
#include "pbe/proposer/default_grammars.hpp"
#include "pbe/proposer/local.hpp"
#include "pbe/tasks/check.hpp"
#include "pbe/tasks/io.hpp"
#include "pbe/turtle/ascii.hpp"

namespace fs = std::filesystem;
using namespace pbe;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

fs::path fixture(const std::string& name) { return fs::path(PBE_FIXTURE_DIR) / name; }

const std::map<std::string, std::string>& lambda2_programs() {
  static const std::map<std::string, std::string> programs{
      {"lambda2-dedup", "(lambda xs (unique xs))"},
      {"lambda2-reverse", "(lambda xs (reverse xs))"},
      {"lambda2-droplast", "(lambda xs (take (- (length xs) 1) xs))"},
      {"lambda2-dropmax",
       "(lambda xs (filter (lambda x (< x (fold (lambda a (lambda b (max a b))) (head xs) xs))) xs))"},
      {"lambda2-dupli", "(lambda xs (fold (lambda acc (lambda x (append acc (cons x (cons x (range 0)))))) (range 0) xs))"},
      {"lambda2-evens", "(lambda xs (filter (lambda x (= (mod x 2) 0)) xs))"},
      {"lambda2-multfirst", "(lambda xs (map (lambda x (head xs)) xs))"},
      {"lambda2-multlast", "(lambda xs (map (lambda x (head (reverse xs))) xs))"},
      {"lambda2-shiftl", "(lambda xs (if (= (length xs) 0) xs (append (tail xs) (cons (head xs) (range 0)))))"},
      {"lambda2-shiftr",
       "(lambda xs (if (= (length xs) 0) xs (cons (head (reverse xs)) (take (- (length xs) 1) xs))))"},
  };
  return programs;
}

// 1. Reference programs fit and generalize on the generated corpus.
Outcome lambda2_corpus() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto tasks = tasks::load_tasks(fixture("lambda2.jsonl"));
  o.require(tasks.size() == 10, "expected 10 tasks, got " + std::to_string(tasks.size()));
  std::size_t ok = 0;
  for (const auto& task : tasks) {
    o.require(task.train.size() == 10 && task.holdout.size() == 5, task.id + " has the wrong example counts");
    const auto it = lambda2_programs().find(task.id);
    if (it == lambda2_programs().end()) {
      o.require(false, "no reference for " + task.id);
      continue;
    }
    const auto program = tasks::parse_program(task.domain, it->second);
    const bool fit = tasks::check_fit(program, task);
    const bool gen = tasks::check_generalization(program, task);
    o.require(fit && gen, task.id + (fit ? " does not generalize" : " does not fit"));
    ok += fit && gen;
  }
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "took " + fmt(secs) + " s");
  o.detail = std::to_string(ok) + "/10 in " + fmt(secs) + " s" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// 2. A proposer that emits the right program with probability 0.1 is found
// after about 10 samples on average.
Outcome stub_first_hit() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto tasks = tasks::load_tasks(fixture("lambda2.jsonl"));
  const auto& task = tasks.at(1);  // reverse
  proposer::StubProposer stub({{lambda2_programs().at(task.id), 0.1, std::nullopt}}, "(lambda xs xs)", 7);
  engine::SolveOptions options;
  options.k = 10'000;
  double sum = 0.0;
  std::size_t hits = 0;
  bool verified = true;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    options.nonce = trial;
    const auto result = engine::solve(task, stub, options);
    if (!result.first_hit || !result.selected) continue;
    sum += static_cast<double>(*result.first_hit);
    ++hits;
    const auto& chosen = result.satisfying[*result.selected];
    verified = verified && tasks::check_fit(tasks::parse_program(task.domain, chosen.source), task);
  }
  const double mean = hits ? sum / hits : 0.0;
  const double secs = seconds_since(t0);
  o.require(hits == 1000, std::to_string(1000 - hits) + " trials missed");
  o.require(mean >= 8.0 && mean <= 12.0, "mean outside [8, 12]");
  o.require(verified, "a returned program failed re-verification");
  o.require(secs < 30.0, "took " + fmt(secs) + " s");
  o.detail = "mean first hit " + fmt(mean) + " in " + fmt(secs) + " s" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

engine::SeedDataset list_seed() {
  engine::SeedDataset seed;
  seed.domain = tasks::Domain::List;
  Rng rng(11);
  engine::InputConfig inputs;
  for (const auto& [id, source] : lambda2_programs()) {
    const auto xs = engine::sample_inputs(tasks::Domain::List, rng, inputs);
    if (auto entry = engine::make_entry(tasks::Domain::List, source, xs)) seed.entries.push_back(std::move(*entry));
  }
  return seed;
}

// 3. Generated records all re-verify and are distinct programs.
Outcome datagen_500() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto seed = list_seed();
  proposer::GrammarProposer grammar(proposer::default_grammar(tasks::Domain::List), 3);
  engine::DatagenOptions options;
  options.n = 500;
  options.seed = 5;
  const auto data = engine::generate_tune_dataset(seed, grammar, options);

  std::size_t verified = 0;
  std::set<std::string> canon;
  for (const auto& r : data.records) {
    const auto c = tasks::canonical_source(tasks::Domain::List, r.program);
    if (c) canon.insert(*c);
    engine::SeedEntry entry{r.program, r.inputs, r.outputs, {}, {}};
    verified += engine::verify_entry(tasks::Domain::List, entry);
  }
  const std::size_t n = data.records.size();
  const double secs = seconds_since(t0);
  o.require(n == 500, "got " + std::to_string(n) + " records");
  o.require(verified == n, std::to_string(n - verified) + " records fail re-execution");
  o.require(canon.size() == n, std::to_string(n - canon.size()) + " canonical duplicates");
  o.require(secs < 60.0, "took " + fmt(secs) + " s");
  o.detail = std::to_string(verified) + "/" + std::to_string(n) + " verified, " + std::to_string(n - canon.size()) +
             " duplicates, " + std::to_string(data.attempts) + " attempts in " + fmt(secs) + " s" +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

bool varied(const engine::SeedEntry& e) {
  std::set<std::string> outs;
  bool changed = false;
  for (std::size_t i = 0; i < e.outputs.size(); ++i) {
    const auto& v = std::get<tasks::Value>(e.outputs[i]);
    outs.insert(v.repr());
    changed = changed || !(v == e.inputs[i]);
  }
  return outs.size() >= 3 && changed;
}

// 4. Seed of depth-2 grammar programs, adaptation tasks drawn from depth-3
// programs the depth-2 grammar cannot derive.
Outcome wake_sleep() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto domain = tasks::Domain::List;
  const auto base = proposer::default_grammar(domain);
  const auto depth2 = base.with_max_depth(2);
  Rng rng(1);
  std::set<std::string> seen;

  engine::SeedDataset seed;
  seed.domain = domain;
  for (int tries = 0; seed.size() < 20 && tries < 100'000; ++tries) {
    const auto s = proposer::grammar_sample(base, rng, 2);
    if (!seen.insert(s.source).second) continue;
    Rng input_rng(rng.next());
    engine::InputConfig ic;
    ic.count = 10;
    auto entry = engine::make_entry(domain, s.source, engine::sample_inputs(domain, input_rng, ic));
    if (entry && varied(*entry)) seed.entries.push_back(std::move(*entry));
  }

  std::vector<tasks::Task> adapt_set;
  for (int tries = 0; adapt_set.size() < 40 && tries < 100'000; ++tries) {
    const auto s = proposer::grammar_sample(base, rng, 3);
    if (!seen.insert(s.source).second) continue;
    try {
      proposer::grammar_logprob(depth2, s.source);
      continue;
    } catch (const proposer::UnderivableProgram&) {
    }
    Rng input_rng(rng.next());
    engine::InputConfig ic;
    ic.count = 15;
    const auto entry = engine::make_entry(domain, s.source, engine::sample_inputs(domain, input_rng, ic));
    if (!entry || !varied(*entry)) continue;
    tasks::Task t;
    t.id = "d3-" + std::to_string(adapt_set.size());
    t.domain = domain;
    for (std::size_t i = 0; i < 15; ++i) (i < 10 ? t.train : t.holdout).push_back({entry->inputs[i], entry->outputs[i]});
    adapt_set.push_back(std::move(t));
  }

  engine::AdaptOptions options;
  options.rounds = 3;
  options.k = 200;
  options.stop_when_idle = false;
  const auto trace = engine::adapt(seed, adapt_set, engine::grammar_train_hook(base.with_max_depth(3), 5), options);
  const double secs = seconds_since(t0);

  std::string cum, sizes;
  for (const auto& r : trace.rounds) {
    cum += (cum.empty() ? "" : "->") + std::to_string(r.cumulative_solved);
    sizes += (sizes.empty() ? std::to_string(r.seed_before) : "") + "->" + std::to_string(r.seed_after);
  }
  o.require(trace.rounds.size() == 3, "ran " + std::to_string(trace.rounds.size()) + " rounds");
  for (std::size_t i = 1; i < trace.rounds.size(); ++i) {
    o.require(trace.rounds[i].cumulative_solved > trace.rounds[i - 1].cumulative_solved,
              "solved count stalled in round " + std::to_string(i));
  }
  for (const auto& r : trace.rounds) o.require(r.seed_after >= r.seed_before, "seed shrank");
  o.require(secs < 300.0, "took " + fmt(secs) + " s");
  o.detail = "seed " + std::to_string(seed.size()) + ", " + std::to_string(adapt_set.size()) + " tasks; solved " + cum +
             ", seed " + sizes + " in " + fmt(secs) + " s" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// 5. Turtle goldens.
Outcome turtle_goldens() {
  Outcome o;
  using namespace turtle;
  const auto t0 = Clock::now();

  const auto square = execute(parse("(loop 4 (forward 100) (left 90))"));
  const double gap = std::hypot(square.final_state.x, square.final_state.y);
  o.require(gap < 1e-6, "square misses its start by " + fmt(gap));
  o.require(std::abs(square.final_state.heading - 90.0) < 1e-9, "square does not restore heading");

  // Unit steps turning one degree: the endpoint sums e^{i(90+k)deg}, k < 180,
  // which is i - cot(0.5 deg).
  const auto arc = execute(parse("(loop HALF_INF (forward EPS_DIST) (left EPS_ANGLE))"));
  const double cot_half = 1.0 / std::tan(0.5 * std::numbers::pi / 180.0);
  o.require(arc.final_state.heading == 270.0, "semicircle heading " + fmt(arc.final_state.heading));
  o.require(std::abs(arc.final_state.x + cot_half) < 1e-6 && std::abs(arc.final_state.y - 1.0) < 1e-6,
            "semicircle endpoint (" + fmt(arc.final_state.x) + ", " + fmt(arc.final_state.y) + ")");

  for (const char* src : {"(loop 4 (forward 100) (left 90))", "(loop HALF_INF (forward EPS_DIST) (left EPS_ANGLE))",
                          "(for i 36 (forward (* 4 i)) (right 170))", "(do (penup) (forward 50))"}) {
    const auto text = render_ascii(parse(src)).text();
    std::size_t lines = 1, width = 0;
    bool digits = true, rectangular = true;
    for (char c : text) {
      if (c == '\n') {
        rectangular = rectangular && width == 32;
        ++lines;
        width = 0;
      } else {
        digits = digits && c >= '0' && c <= '9';
        ++width;
      }
    }
    rectangular = rectangular && width == 32 && lines == 32;
    o.require(digits && rectangular, std::string("bad grid for ") + src);
  }

  const auto white = to_ascii(BitCanvas(512, 512, false));
  const auto black = to_ascii(BitCanvas(512, 512, true));
  BitCanvas half(512, 512, false);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 16; ++c) half.set(r, c);
  const auto half_grid = to_ascii(half);
  bool all_white = true, all_black = true;
  for (int r = 0; r < k_grid_size; ++r)
    for (int c = 0; c < k_grid_size; ++c) {
      all_white = all_white && white.at(r, c) == 0;
      all_black = all_black && black.at(r, c) == 9;
    }
  o.require(all_white, "white canvas is not all 0");
  o.require(all_black, "black canvas is not all 9");
  o.require(half_grid.at(0, 0) == 5 && half_grid.at(0, 1) == 0, "half-black block is not 5");

  const auto trace = execute(parse("(for i 36 (forward (* 4 i)) (right 170))"));
  const auto once = rasterize(trace);
  const auto pgm = write_pgm(once);
  const auto reread = read_pgm(std::span(reinterpret_cast<const std::uint8_t*>(pgm.data()), pgm.size()));
  o.require(once == rasterize(trace), "rasterize is not repeatable");
  o.require(reread == once && to_ascii(reread) == to_ascii(once), "PGM round trip changes the canvas");
  const double secs = seconds_since(t0);
  o.require(secs < 5.0, "took " + fmt(secs) + " s");
  o.detail = "in " + fmt(secs) + " s" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// 6. Generalization and oracle accuracy on a hand-scored fixture.
Outcome metrics_fixture() {
  Outcome o;
  const auto task_list = tasks::load_tasks(fixture("metrics10.jsonl"));
  const std::string dbl = "(lambda xs (map (lambda x (* 2 x)) xs))";
  const std::string inc = "(lambda xs (map (lambda x (+ x 1)) xs))";
  const std::string dbl_abs = "(lambda xs (map (lambda x (abs (* 2 x))) xs))";
  const std::string inc_abs = "(lambda xs (map (lambda x (abs (+ x 1))) xs))";

  std::vector<tasks::SolveResult> results;
  for (std::size_t i = 0; i < task_list.size(); ++i) {
    const auto& task = task_list[i];
    const bool even = i % 2 == 0;
    const std::string& good = even ? dbl : inc;
    const std::string& bad = even ? dbl_abs : inc_abs;
    std::vector<std::string> programs;
    std::size_t pick = 0;
    if (i <= 4) programs = {good};
    else if (i <= 6) programs = {bad, good};  // overfit one selected
    else if (i == 7) programs = {bad};
    tasks::SolveResult r;
    r.task_id = task.id;
    for (const auto& src : programs) {
      const auto p = tasks::parse_program(task.domain, src);
      o.require(tasks::check_fit(p, task), src + " does not fit " + task.id);
      r.satisfying.push_back({r.satisfying.size(), src, tasks::check_generalization(p, task), {}, {}});
    }
    if (!programs.empty()) r.selected = pick;
    results.push_back(std::move(r));
  }
  const auto report = tasks::score_run(results, task_list);
  // By hand: t0..t4 generalize; t5, t6 have a generalizing alternative; t7
  // overfits; t8, t9 unsolved.
  o.require(report.tasks == 10, "scored " + std::to_string(report.tasks) + " tasks");
  o.require(std::abs(report.generalization_accuracy - 0.5) < 1e-12,
            "generalization " + fmt(report.generalization_accuracy) + " != 0.5");
  o.require(report.oracle_accuracy && std::abs(*report.oracle_accuracy - 0.7) < 1e-12, "oracle != 0.7");

  // Random result sets: a selected program that generalizes is itself an
  // oracle witness, so the oracle column can never trail.
  Rng rng(23);
  std::size_t violations = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<tasks::SolveResult> rs;
    for (const auto& task : task_list) {
      tasks::SolveResult r;
      r.task_id = task.id;
      const auto n = rng.below(4);
      for (std::size_t j = 0; j < n; ++j) r.satisfying.push_back({j, "p", rng.bernoulli(0.5), {}, {}});
      if (n) r.selected = rng.below(n);
      rs.push_back(std::move(r));
    }
    const auto rep = tasks::score_run(rs, task_list);
    violations += *rep.oracle_accuracy < rep.generalization_accuracy;
  }
  o.require(violations == 0, std::to_string(violations) + " random result sets with oracle < generalization");

  // On a real run the oracle can never trail generalization.
  const auto corpus = tasks::load_tasks(fixture("lambda2.jsonl"));
  proposer::GrammarProposer grammar(proposer::default_grammar(tasks::Domain::List), 1);
  engine::SolveOptions options;
  options.k = 256;
  options.stop = engine::SolveOptions::Stop::Exhaustive;
  const auto run = tasks::score_run(engine::solve_all(corpus, grammar, options), corpus);
  o.require(run.oracle_accuracy && *run.oracle_accuracy >= run.generalization_accuracy, "oracle < generalization");
  o.detail = "fixture gen " + fmt(report.generalization_accuracy) + " oracle " +
             fmt(report.oracle_accuracy.value_or(-1)) + "; corpus gen " + fmt(run.generalization_accuracy) +
             " oracle " + fmt(run.oracle_accuracy.value_or(-1)) + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// Brute-force coefficients in long double, ranks by counting.
long double brute_pearson(const std::vector<long double>& x, const std::vector<long double>& y) {
  const std::size_t n = x.size();
  long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const long double mx = sx / n, my = sy / n;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<long double> brute_ranks(const std::vector<double>& v) {
  std::vector<long double> r;
  for (double a : v) {
    long double less = 0, equal = 0;
    for (double b : v) {
      less += b < a;
      equal += b == a;
    }
    r.push_back(1 + less + (equal - 1) / 2);
  }
  return r;
}

// 7. Analytics: description lengths, correlation, budget estimation.
Outcome analytics_checks() {
  Outcome o;
  const auto prior = proposer::default_grammar(tasks::Domain::List);
  std::vector<std::string> programs{"(lambda xs (reverse xs))", "(lambda xs (sort xs))"};
  Rng rng(29);
  for (int i = 0; i < 50; ++i) programs.push_back(proposer::grammar_sample(prior, rng).source);
  std::size_t mismatched = 0;
  for (const auto& src : programs) {
    const auto dl = analytics::description_lengths(src, prior, analytics::PosteriorSource::grammar());
    mismatched += !(dl.posterior_dl == dl.prior_dl && dl.posterior_is_prior);
    o.require(std::abs(dl.prior_dl + proposer::grammar_logprob(prior, src)) < 1e-12, "prior_dl is not -logprob");
  }
  o.require(mismatched == 0, std::to_string(mismatched) + " records with posterior != prior");

  // Distinct values, ties in x, ties in both, and a monotone pair.
  const std::vector<std::pair<std::vector<double>, std::vector<double>>> fixtures{
      {{3.2, -1.0, 7.5, 3.2, 0.25}, {10.0, 2.0, 4.0, 9.0, -3.5}},
      {{1, 2, 3, 4, 5}, {2.5, 0.1, 9, -4, 7}},
      {{5, 5, 1, 1, 3}, {2, 2, 2, 8, 1}},
      {{0.001, 0.01, 0.1, 1, 10}, {1, 4, 9, 16, 1e6}},
  };
  double p = 0, s = 0;
  for (const auto& [x, y] : fixtures) {
    const std::vector<long double> lx(x.begin(), x.end()), ly(y.begin(), y.end());
    p = analytics::correlate(x, y, analytics::Method::Pearson).coefficient;
    s = analytics::correlate(x, y, analytics::Method::Spearman).coefficient;
    const long double p_ref = brute_pearson(lx, ly);
    const long double s_ref = brute_pearson(brute_ranks(x), brute_ranks(y));
    o.require(std::abs(p - p_ref) < 1e-12, "pearson " + fmt(p) + " vs " + fmt(static_cast<double>(p_ref)));
    o.require(std::abs(s - s_ref) < 1e-12, "spearman " + fmt(s) + " vs " + fmt(static_cast<double>(s_ref)));
  }

  const auto corpus = tasks::load_tasks(fixture("lambda2.jsonl"));
  const auto& task = corpus.at(1);
  std::string rates;
  for (double rate : {0.5, 0.1, 0.01}) {
    proposer::StubProposer stub({{lambda2_programs().at(task.id), rate, std::nullopt}}, "(lambda xs xs)", 19);
    const auto est = analytics::estimate_budget(task, stub, 10, 1000);
    const double sigma = std::sqrt(rate * (1 - rate) / static_cast<double>(est.drawn));
    o.require(std::abs(est.solve_rate - rate) <= 3 * sigma,
              "p=" + fmt(rate) + " estimated " + fmt(est.solve_rate) + " (sigma " + fmt(sigma) + ")");
    rates += (rates.empty() ? "" : ", ") + fmt(est.solve_rate);
  }
  o.detail = std::to_string(programs.size()) + " dl records, " + std::to_string(fixtures.size()) +
             " correlation fixtures (last pearson " + fmt(p) + " spearman " + fmt(s) + "); rates " + rates + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// 8. Two grammar-mode CLI runs write byte-identical results.
Outcome cli_determinism() {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / ("pbe_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  std::vector<std::string> files;
  for (const char* threads : {"1", "4"}) {
    const fs::path out = root / (std::string("run") + threads);
    const std::string cmd = std::string("\"") + PBE_CLI_PATH + "\" -o \"" + out.string() + "\" --set solve.threads=" +
                            threads + " solve --tasks \"" + fixture("lambda2.jsonl").string() +
                            "\" -k 128 --seed 42 > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    o.require(rc == 0, "pbe solve exited with " + std::to_string(rc));
    try {
      files.push_back(tasks::read_file(out / "results.jsonl"));
    } catch (const Error& e) {
      o.require(false, e.what());
    }
  }
  fs::remove_all(root);
  if (files.size() == 2) {
    o.require(!files[0].empty() && files[0] == files[1], "results.jsonl differs between runs");
    if (o.pass) o.detail = std::to_string(files[0].size()) + " identical bytes (1 vs 4 threads)";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"lambda2 corpus fit and generalization", lambda2_corpus},
      {"stub proposer first hit", stub_first_hit},
      {"grammar datagen n=500", datagen_500},
      {"wake-sleep curriculum", wake_sleep},
      {"turtle goldens", turtle_goldens},
      {"metrics", metrics_fixture},
      {"analytics", analytics_checks},
      {"solve determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first
              << (o.detail.empty() ? "" : " - " + o.detail) << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
