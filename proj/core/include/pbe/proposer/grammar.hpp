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

#ifndef PBE_PROPOSER_GRAMMAR_HPP_
#define PBE_PROPOSER_GRAMMAR_HPP_

// Typed probabilistic grammar over s-expressions. Nonterminals are type
// names ("list", "int", "cmd", ...). A production rewrites one nonterminal
// into
//   - a literal datum, which may be a whole closed fragment like (range 0),
//   - a variable of that type currently in scope, or
//   - a form (head child ...), where each child names a nonterminal and may
//     introduce lambda parameters: child "int@int,int" expands to
//     (lambda x1 (lambda x2 <int>)) with x1 and x2 bound as ints.
//
// At every choice point the productions that can apply are renormalized:
// variables only when one of the right type is visible, and only literals and
// variables once the form depth reaches max_depth. A variable choice further
// pays -log(number of visible variables of that type).
//
// A program can have several derivations (a fragment literal may coincide
// with a form). Scores are marginal over all derivations, and the sampler
// reports the scorer's value, so the two agree exactly.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pbe/common.hpp"
#include "pbe/minilang/sexpr.hpp"
#include "pbe/tasks/task.hpp"

namespace pbe::proposer {

class InvalidGrammar : public Error {
 public:
  using Error::Error;
};
class DepthExhausted : public Error {
 public:
  using Error::Error;
};
class UnderivableProgram : public Error {
 public:
  using Error::Error;
};

struct ChildSpec {
  std::string nonterminal;
  std::vector<std::string> params;  // types of lambda parameters, outermost first
};

struct Production {
  enum class Kind { Literal, Variable, Form };
  std::string lhs;
  Kind kind = Kind::Literal;
  sexpr::Datum literal;
  std::string head;
  std::vector<ChildSpec> children;
  double weight = 1.0;

  bool terminal() const { return kind != Kind::Form; }
  /// Stable identity, e.g. "int -> (+ int int)" or "list -> (map int@int list)".
  std::string key() const;
};

/// The program is (lambda p1 ... <start>) with one lambda per parameter.
struct StartSpec {
  std::string nonterminal;
  std::vector<std::string> param_types;
  std::vector<std::string> param_names;
};

class Grammar {
 public:
  /// Throws InvalidGrammar on duplicate keys, unknown nonterminals, negative
  /// or non-finite weights, or max_depth < 0.
  Grammar(tasks::Domain domain, StartSpec start, std::vector<Production> productions, int max_depth);

  tasks::Domain domain() const { return domain_; }
  const StartSpec& start() const { return start_; }
  const std::vector<Production>& productions() const { return productions_; }
  int max_depth() const { return max_depth_; }

  const std::vector<std::size_t>& alternatives(const std::string& nonterminal) const;
  std::vector<std::string> nonterminals() const;

  /// Same productions, new weights (one per production, same order).
  Grammar with_weights(std::span<const double> weights) const;
  Grammar with_max_depth(int max_depth) const;

  /// Hash of structure and weights, hex.
  std::string snapshot_id() const;

  /// Probability of each alternative of `nonterminal` at a choice point.
  /// Pairs are (production index, probability); inapplicable ones omitted.
  std::vector<std::pair<std::size_t, double>> choice_probabilities(const std::string& nonterminal,
                                                                    bool variable_visible, bool at_depth_cap) const;

 private:
  tasks::Domain domain_;
  StartSpec start_;
  std::vector<Production> productions_;
  int max_depth_;
  std::vector<std::string> nt_names_;
  std::vector<std::vector<std::size_t>> by_nt_;
};

/// Reads one production per line: "lhs: rhs" or "lhs <weight>: rhs", where rhs
/// is `var`, `lit <datum>`, or a form whose children are nonterminal specs.
/// Blank lines and lines starting with '#' are ignored.
std::vector<Production> parse_productions(std::string_view text);

struct GrammarSample {
  std::string source;  // canonical text
  sexpr::Datum datum;
  double logprob = 0.0;
};

/// Top-down weighted sample. `max_depth` overrides the grammar's cap.
/// Throws DepthExhausted when some choice point has no applicable production.
GrammarSample grammar_sample(const Grammar& g, Rng& rng, std::optional<int> max_depth = std::nullopt);
GrammarSample grammar_sample(const Grammar& g, std::uint64_t seed, std::optional<int> max_depth = std::nullopt);

struct Derivation {
  double logprob = 0.0;       // marginal over derivations
  double best_logprob = 0.0;  // most probable single derivation
  std::vector<std::size_t> counts;  // production uses in the best derivation
};

/// Scores a program datum, as produced by the domain's canonical printer.
/// Throws UnderivableProgram.
Derivation grammar_derivation(const Grammar& g, const sexpr::Datum& program);

/// Parses `source` in the grammar's domain, canonicalizes, then scores.
/// Throws UnderivableProgram, including for text that does not parse.
double grammar_logprob(const Grammar& g, std::string_view source);

struct GrammarFit {
  Grammar grammar;
  std::size_t used = 0;     // programs that contributed counts
  std::size_t skipped = 0;  // unparseable or underivable programs
};

/// Weight of each production becomes (count + smoothing) / sum over its
/// nonterminal of (count + smoothing), with counts from each program's best
/// derivation. A nonterminal with zero total keeps the base weights.
GrammarFit grammar_fit(const Grammar& base, std::span<const std::string> programs, double smoothing = 1.0);

nlohmann::json grammar_to_json(const Grammar& g);

}  // namespace pbe::proposer

#endif  // PBE_PROPOSER_GRAMMAR_HPP_
