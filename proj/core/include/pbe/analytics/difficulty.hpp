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

#ifndef PBE_ANALYTICS_DIFFICULTY_HPP_
#define PBE_ANALYTICS_DIFFICULTY_HPP_

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbe/analytics/correlate.hpp"
#include "pbe/minilang/interpreter.hpp"
#include "pbe/proposer/candidate.hpp"
#include "pbe/proposer/grammar.hpp"

namespace pbe::analytics {

inline constexpr double k_infinite_budget = std::numeric_limits<double>::infinity();

class MissingLogprobs : public Error {
 public:
  using Error::Error;
};

struct BudgetEstimate {
  double solve_rate = 0.0;                    // fitting candidates / candidates drawn
  double expected_budget = k_infinite_budget;  // 1 / solve_rate
  std::size_t fitting = 0;
  std::size_t drawn = 0;
  std::size_t runs_hit = 0;  // trials with at least one fit
  /// Mean 1-based first-hit index over trials that hit; NaN when none did.
  double mean_first_hit = std::numeric_limits<double>::quiet_NaN();
};

/// Runs `trials` exhaustive solves of k_cap samples each (nonce = trial
/// index) and pools the per-sample fit rate. Throws pbe::Error when trials
/// or k_cap is 0.
BudgetEstimate estimate_budget(const tasks::Task& task, proposer::Proposer& proposer, std::size_t trials,
                               std::size_t k_cap, const minilang::EvalBudget& budget = {}, std::size_t threads = 1);

/// Where the conditional description length comes from.
struct PosteriorSource {
  enum class Kind { Grammar, Tokens };
  Kind kind = Kind::Grammar;
  std::vector<double> token_logprobs;

  /// The sampler is the prior grammar itself, so posterior equals prior.
  static PosteriorSource grammar() { return {}; }
  static PosteriorSource tokens(std::vector<double> logprobs) { return {Kind::Tokens, std::move(logprobs)}; }
  /// From an LLM candidate; throws MissingLogprobs when it carries none.
  static PosteriorSource from_candidate(const proposer::Candidate& candidate);
};

struct DescriptionLengths {
  double prior_dl = 0.0;      // nats
  double posterior_dl = 0.0;  // nats
  bool posterior_is_prior = false;
};

/// prior_dl = -log p(program | prior); posterior_dl = -sum of token logprobs,
/// or prior_dl for the grammar source. Throws UnderivableProgram.
DescriptionLengths description_lengths(std::string_view program, const proposer::Grammar& prior,
                                       const PosteriorSource& posterior);

struct DifficultyRecord {
  std::string task_id;
  std::size_t size = 0;  // syntax nodes
  double prior_dl = 0.0;
  double posterior_dl = 0.0;
  bool posterior_is_prior = false;
  double solve_rate = 0.0;
  double expected_budget = k_infinite_budget;
  double mean_first_hit = std::numeric_limits<double>::quiet_NaN();
};

enum class Field { Size, PriorDl, PosteriorDl, SolveRate, ExpectedBudget };
const char* field_name(Field f);
Field parse_field(std::string_view name);
double field_value(const DifficultyRecord& r, Field f);

/// Correlates two fields across records; infinite budgets are censored.
Correlation correlate(std::span<const DifficultyRecord> records, Field x, Field y, Method method);

/// Header task_id,size,prior_dl,posterior_dl,solve_rate,expected_budget; an
/// infinite budget prints as "inf".
std::string difficulty_csv(std::span<const DifficultyRecord> records);

/// Budget against each predictor, Spearman and Pearson (the latter on raw
/// and on log budget), with the censoring count.
std::string difficulty_summary(std::span<const DifficultyRecord> records);

}  // namespace pbe::analytics

#endif  // PBE_ANALYTICS_DIFFICULTY_HPP_
