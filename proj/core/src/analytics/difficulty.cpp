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

#include "pbe/analytics/difficulty.hpp"

#include <cmath>
#include <cstdio>

#include "pbe/engine/solve.hpp"

namespace pbe::analytics {

BudgetEstimate estimate_budget(const tasks::Task& task, proposer::Proposer& proposer, std::size_t trials,
                               std::size_t k_cap, const minilang::EvalBudget& budget, std::size_t threads) {
  if (trials == 0) throw Error("estimate_budget needs at least one trial");
  if (k_cap == 0) throw Error("estimate_budget needs k_cap >= 1");
  std::vector<tasks::SolveResult> runs(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    engine::SolveOptions so;
    so.k = k_cap;
    so.budget = budget;
    so.stop = engine::SolveOptions::Stop::Exhaustive;
    so.select = engine::SolveOptions::Select::First;
    so.nonce = t;
    runs[t] = engine::solve(task, proposer, so);
  });
  BudgetEstimate est;
  double first_hits = 0;
  for (const auto& r : runs) {
    est.drawn += r.samples_drawn;
    est.fitting += r.satisfying.size();
    if (r.first_hit) {
      ++est.runs_hit;
      first_hits += static_cast<double>(*r.first_hit);
    }
  }
  if (est.drawn) est.solve_rate = static_cast<double>(est.fitting) / static_cast<double>(est.drawn);
  if (est.fitting) est.expected_budget = 1.0 / est.solve_rate;
  if (est.runs_hit) est.mean_first_hit = first_hits / static_cast<double>(est.runs_hit);
  return est;
}

PosteriorSource PosteriorSource::from_candidate(const proposer::Candidate& candidate) {
  if (candidate.per_token && !candidate.per_token->empty()) return tokens(*candidate.per_token);
  if (candidate.logprob) return tokens({*candidate.logprob});
  throw MissingLogprobs("candidate from " + candidate.proposer_id + " carries no logprobs");
}

DescriptionLengths description_lengths(std::string_view program, const proposer::Grammar& prior,
                                       const PosteriorSource& posterior) {
  DescriptionLengths dl;
  dl.prior_dl = -proposer::grammar_logprob(prior, program);
  if (posterior.kind == PosteriorSource::Kind::Grammar) {
    dl.posterior_dl = dl.prior_dl;
    dl.posterior_is_prior = true;
  } else {
    if (posterior.token_logprobs.empty()) throw MissingLogprobs("no token logprobs supplied");
    double sum = 0;
    for (double t : posterior.token_logprobs) sum += t;
    dl.posterior_dl = -sum;
  }
  return dl;
}

const char* field_name(Field f) {
  switch (f) {
    case Field::Size: return "size";
    case Field::PriorDl: return "prior_dl";
    case Field::PosteriorDl: return "posterior_dl";
    case Field::SolveRate: return "solve_rate";
    case Field::ExpectedBudget: return "expected_budget";
  }
  return "?";
}

Field parse_field(std::string_view name) {
  for (Field f : {Field::Size, Field::PriorDl, Field::PosteriorDl, Field::SolveRate, Field::ExpectedBudget})
    if (name == field_name(f)) return f;
  throw Error("unknown difficulty field '" + std::string(name) + "'");
}

double field_value(const DifficultyRecord& r, Field f) {
  switch (f) {
    case Field::Size: return static_cast<double>(r.size);
    case Field::PriorDl: return r.prior_dl;
    case Field::PosteriorDl: return r.posterior_dl;
    case Field::SolveRate: return r.solve_rate;
    case Field::ExpectedBudget: return r.expected_budget;
  }
  return 0.0;
}

Correlation correlate(std::span<const DifficultyRecord> records, Field x, Field y, Method method) {
  std::vector<double> xs, ys;
  for (const auto& r : records) {
    xs.push_back(field_value(r, x));
    ys.push_back(field_value(r, y));
  }
  return correlate(xs, ys, method);
}

namespace {

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string difficulty_csv(std::span<const DifficultyRecord> records) {
  std::string out = "task_id,size,prior_dl,posterior_dl,solve_rate,expected_budget\n";
  for (const auto& r : records) {
    std::string id = r.task_id;
    if (id.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char c : id) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      id = q + "\"";
    }
    out += id + "," + std::to_string(r.size) + "," + num(r.prior_dl) + "," + num(r.posterior_dl) + "," +
           num(r.solve_rate) + "," + num(r.expected_budget) + "\n";
  }
  return out;
}

std::string difficulty_summary(std::span<const DifficultyRecord> records) {
  std::size_t censored = 0;
  bool all_prior = !records.empty();
  for (const auto& r : records) {
    if (!std::isfinite(r.expected_budget)) ++censored;
    all_prior = all_prior && r.posterior_is_prior;
  }
  std::vector<DifficultyRecord> logged(records.begin(), records.end());
  for (auto& r : logged) r.expected_budget = std::log(r.expected_budget);

  std::string out = "records " + std::to_string(records.size()) + " censored " + std::to_string(censored) + "\n";
  for (Field f : {Field::Size, Field::PriorDl, Field::PosteriorDl}) {
    out += std::string("budget~") + field_name(f);
    try {
      const auto s = correlate(records, f, Field::ExpectedBudget, Method::Spearman);
      const auto p = correlate(records, f, Field::ExpectedBudget, Method::Pearson);
      const auto pl = correlate(logged, f, Field::ExpectedBudget, Method::Pearson);
      out += " spearman " + num(s.coefficient) + " pearson " + num(p.coefficient) + " pearson_log " +
             num(pl.coefficient) + " n " + std::to_string(s.n);
    } catch (const InsufficientData& e) {
      out += std::string(" n/a (") + e.what() + ")";
    }
    out += "\n";
  }
  if (all_prior) out += "posterior_dl equals prior_dl (unconditional grammar proposer)\n";
  return out;
}

}  // namespace pbe::analytics
