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

#include "pbe/proposer/grammar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include <nlohmann/json.hpp>

#include "pbe/tasks/program.hpp"

namespace pbe::proposer {

namespace {

using sexpr::Datum;

constexpr double k_neg_inf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == k_neg_inf) return b;
  if (b == k_neg_inf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

std::string child_text(const ChildSpec& c) {
  std::string out = c.nonterminal;
  for (std::size_t i = 0; i < c.params.size(); ++i) out += (i == 0 ? "@" : ",") + c.params[i];
  return out;
}

ChildSpec parse_child(const std::string& text) {
  ChildSpec c;
  const auto at = text.find('@');
  c.nonterminal = text.substr(0, at);
  if (at != std::string::npos) {
    std::string rest = text.substr(at + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      c.params.push_back(rest.substr(pos, comma - pos));
      pos = comma + 1;
    }
  }
  for (const auto& p : c.params)
    if (p.empty()) throw InvalidGrammar("empty parameter type in child '" + text + "'");
  if (c.nonterminal.empty()) throw InvalidGrammar("empty nonterminal in child '" + text + "'");
  return c;
}

struct Binding {
  std::string name;
  std::string type;
};
using Env = std::vector<Binding>;

std::size_t visible_count(const Env& env, const std::string& type) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (env[i].type != type) continue;
    bool shadowed = false;
    for (std::size_t j = i + 1; j < env.size() && !shadowed; ++j) shadowed = env[j].name == env[i].name;
    if (!shadowed) ++n;
  }
  return n;
}

std::vector<const Binding*> visible_of(const Env& env, const std::string& type) {
  std::vector<const Binding*> out;
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (env[i].type != type) continue;
    bool shadowed = false;
    for (std::size_t j = i + 1; j < env.size() && !shadowed; ++j) shadowed = env[j].name == env[i].name;
    if (!shadowed) out.push_back(&env[i]);
  }
  return out;
}

const Binding* lookup(const Env& env, const std::string& name) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->name == name) return &*it;
  return nullptr;
}

bool applicable(const Production& p, bool variable_visible, bool at_cap) {
  if (p.weight <= 0) return false;
  if (p.kind == Production::Kind::Variable) return variable_visible;
  if (p.kind == Production::Kind::Form) return !at_cap;
  return true;
}

struct Score {
  double marginal = k_neg_inf;
  double best = k_neg_inf;
  std::vector<std::size_t> path;  // production indices of the best derivation
};

class Engine {
 public:
  Engine(const Grammar& g, int cap) : g_(g), cap_(cap) {}

  Score score(const Datum& d, const std::string& nt, Env& env, int depth) {
    const bool var_visible = visible_count(env, nt) > 0;
    const bool at_cap = depth >= cap_;
    const auto& alts = g_.alternatives(nt);
    double z = 0;
    for (std::size_t i : alts)
      if (applicable(g_.productions()[i], var_visible, at_cap)) z += g_.productions()[i].weight;
    Score out;
    if (z <= 0) return out;
    for (std::size_t i : alts) {
      const Production& p = g_.productions()[i];
      if (!applicable(p, var_visible, at_cap)) continue;
      const double lp = std::log(p.weight / z);
      Score cand;
      switch (p.kind) {
        case Production::Kind::Literal:
          if (!(d == p.literal)) continue;
          cand.marginal = cand.best = lp;
          cand.path = {i};
          break;
        case Production::Kind::Variable: {
          if (!d.is_symbol()) continue;
          const Binding* b = lookup(env, d.text);
          if (!b || b->type != nt) continue;
          cand.marginal = cand.best = lp - std::log(static_cast<double>(visible_count(env, nt)));
          cand.path = {i};
          break;
        }
        case Production::Kind::Form:
          if (!form(d, p, env, depth, lp, cand)) continue;
          cand.path.insert(cand.path.begin(), i);
          break;
      }
      out.marginal = log_add(out.marginal, cand.marginal);
      if (cand.best > out.best) {
        out.best = cand.best;
        out.path = std::move(cand.path);
      }
    }
    return out;
  }

  Datum sample(const std::string& nt, Env& env, int depth, Rng& rng) {
    const bool var_visible = visible_count(env, nt) > 0;
    const bool at_cap = depth >= cap_;
    const auto& alts = g_.alternatives(nt);
    std::vector<double> weights;
    weights.reserve(alts.size());
    double z = 0;
    for (std::size_t i : alts) {
      const Production& p = g_.productions()[i];
      weights.push_back(applicable(p, var_visible, at_cap) ? p.weight : 0.0);
      z += weights.back();
    }
    if (z <= 0)
      throw DepthExhausted("no applicable production for '" + nt + "' at depth " + std::to_string(depth));
    const Production& p = g_.productions()[alts[rng.weighted(weights)]];
    switch (p.kind) {
      case Production::Kind::Literal: return p.literal;
      case Production::Kind::Variable: {
        const auto vars = visible_of(env, nt);
        return Datum::make_symbol(vars[rng.below(vars.size())]->name);
      }
      case Production::Kind::Form: break;
    }
    std::vector<Datum> items{Datum::make_symbol(p.head)};
    for (const auto& child : p.children) {
      std::vector<std::string> names;
      for (const auto& type : child.params) {
        names.push_back("x" + std::to_string(env.size() - g_.start().param_types.size() + 1));
        env.push_back({names.back(), type});
      }
      Datum body = sample(child.nonterminal, env, depth + 1, rng);
      env.resize(env.size() - child.params.size());
      for (auto it = names.rbegin(); it != names.rend(); ++it)
        body = Datum::make_list({Datum::make_symbol("lambda"), Datum::make_symbol(*it), std::move(body)});
      items.push_back(std::move(body));
    }
    return Datum::make_list(std::move(items));
  }

 private:
  bool form(const Datum& d, const Production& p, Env& env, int depth, double lp, Score& cand) {
    if (!d.is_list() || d.items.size() != p.children.size() + 1 || !d.items[0].is_symbol(p.head)) return false;
    cand.marginal = cand.best = lp;
    for (std::size_t c = 0; c < p.children.size(); ++c) {
      const ChildSpec& child = p.children[c];
      const Datum* item = &d.items[c + 1];
      const std::size_t mark = env.size();
      bool ok = true;
      for (const auto& type : child.params) {
        if (!item->is_list() || item->items.size() != 3 || !item->items[0].is_symbol("lambda") ||
            !item->items[1].is_symbol()) {
          ok = false;
          break;
        }
        env.push_back({item->items[1].text, type});
        item = &item->items[2];
      }
      Score s;
      if (ok) s = score(*item, child.nonterminal, env, depth + 1);
      env.resize(mark);
      if (!ok || s.marginal == k_neg_inf) return false;
      cand.marginal += s.marginal;
      cand.best += s.best;
      cand.path.insert(cand.path.end(), s.path.begin(), s.path.end());
    }
    return true;
  }

  const Grammar& g_;
  int cap_;
};

Derivation derive(const Grammar& g, const Datum& program, int cap) {
  Env env;
  const Datum* body = &program;
  for (const auto& type : g.start().param_types) {
    if (!body->is_list() || body->items.size() != 3 || !body->items[0].is_symbol("lambda") ||
        !body->items[1].is_symbol())
      throw UnderivableProgram("program does not take the expected parameters: " + sexpr::print(program));
    env.push_back({body->items[1].text, type});
    body = &body->items[2];
  }
  Engine engine(g, cap);
  const Score s = engine.score(*body, g.start().nonterminal, env, 0);
  if (s.marginal == k_neg_inf) throw UnderivableProgram("not derivable in grammar: " + sexpr::print(program));
  Derivation d;
  d.logprob = s.marginal;
  d.best_logprob = s.best;
  d.counts.assign(g.productions().size(), 0);
  for (std::size_t i : s.path) ++d.counts[i];
  return d;
}

Datum canonical_datum(tasks::Domain domain, std::string_view source) {
  try {
    return tasks::program_datum(tasks::parse_program(domain, source));
  } catch (const Error& e) {
    throw UnderivableProgram(std::string("program does not parse: ") + e.what());
  }
}

}  // namespace

std::string Production::key() const {
  std::string rhs;
  switch (kind) {
    case Kind::Literal: rhs = "lit " + sexpr::print(literal); break;
    case Kind::Variable: rhs = "var"; break;
    case Kind::Form:
      rhs = "(" + head;
      for (const auto& c : children) rhs += " " + child_text(c);
      rhs += ")";
      break;
  }
  return lhs + " -> " + rhs;
}

Grammar::Grammar(tasks::Domain domain, StartSpec start, std::vector<Production> productions, int max_depth)
    : domain_(domain), start_(std::move(start)), productions_(std::move(productions)), max_depth_(max_depth) {
  if (max_depth_ < 0) throw InvalidGrammar("max_depth must be non-negative");
  if (start_.param_names.size() != start_.param_types.size())
    throw InvalidGrammar("start parameter names and types differ in length");
  std::set<std::string> keys;
  for (std::size_t i = 0; i < productions_.size(); ++i) {
    const Production& p = productions_[i];
    if (!std::isfinite(p.weight) || p.weight < 0) throw InvalidGrammar("bad weight for " + p.key());
    if (!keys.insert(p.key()).second) throw InvalidGrammar("duplicate production " + p.key());
    auto it = std::find(nt_names_.begin(), nt_names_.end(), p.lhs);
    if (it == nt_names_.end()) {
      nt_names_.push_back(p.lhs);
      by_nt_.emplace_back();
      it = nt_names_.end() - 1;
    }
    by_nt_[static_cast<std::size_t>(it - nt_names_.begin())].push_back(i);
  }
  auto known = [&](const std::string& nt) {
    return std::find(nt_names_.begin(), nt_names_.end(), nt) != nt_names_.end();
  };
  if (!known(start_.nonterminal)) throw InvalidGrammar("start nonterminal '" + start_.nonterminal + "' has no productions");
  for (const auto& p : productions_)
    for (const auto& c : p.children)
      if (!known(c.nonterminal)) throw InvalidGrammar("unknown nonterminal '" + c.nonterminal + "' in " + p.key());
}

const std::vector<std::size_t>& Grammar::alternatives(const std::string& nonterminal) const {
  const auto it = std::find(nt_names_.begin(), nt_names_.end(), nonterminal);
  if (it == nt_names_.end()) throw InvalidGrammar("unknown nonterminal '" + nonterminal + "'");
  return by_nt_[static_cast<std::size_t>(it - nt_names_.begin())];
}

std::vector<std::string> Grammar::nonterminals() const { return nt_names_; }

Grammar Grammar::with_weights(std::span<const double> weights) const {
  if (weights.size() != productions_.size()) throw InvalidGrammar("weight vector has the wrong length");
  auto ps = productions_;
  for (std::size_t i = 0; i < ps.size(); ++i) ps[i].weight = weights[i];
  return Grammar(domain_, start_, std::move(ps), max_depth_);
}

Grammar Grammar::with_max_depth(int max_depth) const { return Grammar(domain_, start_, productions_, max_depth); }

std::string Grammar::snapshot_id() const {
  std::string text = std::string(tasks::domain_name(domain_)) + "|" + std::to_string(max_depth_) + "|" + start_.nonterminal;
  char buf[64];
  for (const auto& p : productions_) {
    std::snprintf(buf, sizeof buf, "%.17g", p.weight);
    text += "\n" + p.key() + "=" + buf;
  }
  return hex64(fnv1a(text));
}

std::vector<std::pair<std::size_t, double>> Grammar::choice_probabilities(const std::string& nonterminal,
                                                                           bool variable_visible,
                                                                           bool at_depth_cap) const {
  double z = 0;
  for (std::size_t i : alternatives(nonterminal))
    if (applicable(productions_[i], variable_visible, at_depth_cap)) z += productions_[i].weight;
  std::vector<std::pair<std::size_t, double>> out;
  if (z <= 0) return out;
  for (std::size_t i : alternatives(nonterminal))
    if (applicable(productions_[i], variable_visible, at_depth_cap)) out.emplace_back(i, productions_[i].weight / z);
  return out;
}

std::vector<Production> parse_productions(std::string_view text) {
  std::vector<Production> out;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InvalidGrammar("line " + std::to_string(lineno) + ": missing ':'");
    Production p;
    std::string lhs = line.substr(0, colon);
    std::string rhs = line.substr(colon + 1);
    const auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    trim(lhs);
    trim(rhs);
    if (const auto space = lhs.find(' '); space != std::string::npos) {
      try {
        p.weight = std::stod(lhs.substr(space + 1));
      } catch (const std::exception&) {
        throw InvalidGrammar("line " + std::to_string(lineno) + ": bad weight");
      }
      lhs = lhs.substr(0, space);
    }
    p.lhs = lhs;
    try {
      if (rhs == "var") {
        p.kind = Production::Kind::Variable;
      } else if (rhs.starts_with("lit ")) {
        p.kind = Production::Kind::Literal;
        p.literal = sexpr::read(rhs.substr(4));
      } else {
        const Datum d = sexpr::read(rhs);
        if (!d.is_list() || !d.items[0].is_symbol()) throw InvalidGrammar("form must start with a symbol");
        p.kind = Production::Kind::Form;
        p.head = d.items[0].text;
        for (std::size_t i = 1; i < d.items.size(); ++i) {
          if (!d.items[i].is_symbol()) throw InvalidGrammar("form children must be nonterminal names");
          p.children.push_back(parse_child(d.items[i].text));
        }
      }
    } catch (const sexpr::ParseError& e) {
      throw InvalidGrammar("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const InvalidGrammar& e) {
      throw InvalidGrammar("line " + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(std::move(p));
  }
  return out;
}

GrammarSample grammar_sample(const Grammar& g, Rng& rng, std::optional<int> max_depth) {
  const int cap = max_depth.value_or(g.max_depth());
  Env env;
  for (std::size_t i = 0; i < g.start().param_types.size(); ++i)
    env.push_back({g.start().param_names[i], g.start().param_types[i]});
  Engine engine(g, cap);
  Datum body = engine.sample(g.start().nonterminal, env, 0, rng);
  for (std::size_t i = g.start().param_names.size(); i-- > 0;)
    body = Datum::make_list({Datum::make_symbol("lambda"), Datum::make_symbol(g.start().param_names[i]), std::move(body)});
  GrammarSample s;
  // Round-trip through the dialect so the text and datum are canonical.
  const Datum canonical = canonical_datum(g.domain(), sexpr::print(body));
  s.source = sexpr::print(canonical);
  s.logprob = derive(g, canonical, cap).logprob;
  s.datum = canonical;
  return s;
}

GrammarSample grammar_sample(const Grammar& g, std::uint64_t seed, std::optional<int> max_depth) {
  Rng rng(seed);
  return grammar_sample(g, rng, max_depth);
}

Derivation grammar_derivation(const Grammar& g, const sexpr::Datum& program) { return derive(g, program, g.max_depth()); }

double grammar_logprob(const Grammar& g, std::string_view source) {
  return derive(g, canonical_datum(g.domain(), source), g.max_depth()).logprob;
}

GrammarFit grammar_fit(const Grammar& base, std::span<const std::string> programs, double smoothing) {
  if (!(smoothing >= 0) || !std::isfinite(smoothing)) throw InvalidGrammar("smoothing must be a finite non-negative number");
  std::vector<double> counts(base.productions().size(), 0.0);
  std::size_t used = 0, skipped = 0;
  for (const auto& src : programs) {
    try {
      const Derivation d = derive(base, canonical_datum(base.domain(), src), base.max_depth());
      for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += static_cast<double>(d.counts[i]);
      ++used;
    } catch (const UnderivableProgram&) {
      ++skipped;
    }
  }
  std::vector<double> weights(counts.size());
  for (const auto& nt : base.nonterminals()) {
    const auto& alts = base.alternatives(nt);
    double total = 0;
    for (std::size_t i : alts) total += counts[i] + smoothing;
    double base_total = 0;
    for (std::size_t i : alts) base_total += base.productions()[i].weight;
    for (std::size_t i : alts) {
      if (total > 0) weights[i] = (counts[i] + smoothing) / total;
      else weights[i] = base_total > 0 ? base.productions()[i].weight / base_total : 0.0;
    }
  }
  return GrammarFit{base.with_weights(weights), used, skipped};
}

nlohmann::json grammar_to_json(const Grammar& g) {
  nlohmann::json j;
  j["domain"] = tasks::domain_name(g.domain());
  j["max_depth"] = g.max_depth();
  j["start"] = {{"nonterminal", g.start().nonterminal},
                {"param_types", g.start().param_types},
                {"param_names", g.start().param_names}};
  j["snapshot"] = g.snapshot_id();
  j["productions"] = nlohmann::json::array();
  for (const auto& p : g.productions()) j["productions"].push_back({{"key", p.key()}, {"weight", p.weight}});
  return j;
}

}  // namespace pbe::proposer
