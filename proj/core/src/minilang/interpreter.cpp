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

#include "pbe/minilang/interpreter.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace pbe::minilang {

struct Frame;
using Env = std::shared_ptr<const Frame>;

struct Frame {
  Value value;
  Env parent;
};

// A lambda or a fix node captured with its environment. `owner` keeps the
// syntax tree alive for closures returned as a program's result.
struct Closure {
  const Node* node;
  Env env;
  NodePtr owner;
};

const char* status_name(EvalStatus status) {
  switch (status) {
    case EvalStatus::Ok: return "Ok";
    case EvalStatus::FuelExhausted: return "FuelExhausted";
    case EvalStatus::TypeError: return "TypeError";
    case EvalStatus::RuntimeError: return "RuntimeError";
  }
  return "?";
}

bool operator==(const EvalOutcome& a, const EvalOutcome& b) {
  return a.status == b.status && a.detail == b.detail && a.fuel_used == b.fuel_used &&
         (a.status != EvalStatus::Ok || a.value == b.value);
}

namespace {

struct FuelOut {};

struct Fault {
  EvalStatus status;
  std::string detail;
};

[[noreturn]] void type_error(std::string msg) { throw Fault{EvalStatus::TypeError, std::move(msg)}; }
[[noreturn]] void runtime_error(std::string msg) { throw Fault{EvalStatus::RuntimeError, std::move(msg)}; }

std::string op_name(Prim p) { return std::string(primitive_info(p).name); }

std::int64_t want_int(const Value& v, Prim p) {
  if (!v.is_int()) type_error(op_name(p) + ": expected Int, got " + kind_name(v.kind()));
  return v.as_int();
}

const std::string& want_str(const Value& v, Prim p) {
  if (!v.is_str()) type_error(op_name(p) + ": expected Str, got " + kind_name(v.kind()));
  return v.as_str();
}

bool want_bool(const Value& v, const std::string& where) {
  if (!v.is_bool()) type_error(where + ": expected Bool, got " + kind_name(v.kind()));
  return v.as_bool();
}

const Value::List& want_list(const Value& v, Prim p) {
  if (!v.is_list()) type_error(op_name(p) + ": expected List, got " + kind_name(v.kind()));
  return v.as_list();
}

void want_data(const Value& v, Prim p) {
  if (!v.is_data()) type_error(op_name(p) + ": functions cannot be compared");
}

std::int64_t checked(bool overflowed, std::int64_t r, Prim p) {
  if (overflowed) runtime_error(op_name(p) + ": integer overflow");
  return r;
}

std::size_t clamp_count(std::int64_t n, std::size_t len) {
  if (n <= 0) return 0;
  return std::min(static_cast<std::size_t>(n), len);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

class Machine {
 public:
  Machine(const EvalBudget& budget, NodePtr owner) : budget_(budget), fuel_(budget.fuel), owner_(std::move(owner)) {}

  std::int64_t used() const { return budget_.fuel - fuel_; }

  Value eval(const Node* node, Env env) {
    DepthGuard guard(*this);
    for (;;) {
      tick();
      switch (node->kind) {
        case NodeKind::Int: return Value::integer(node->int_value);
        case NodeKind::Str: return Value::string(node->name);
        case NodeKind::Bool: return Value::boolean(node->bool_value);
        case NodeKind::Var: return lookup(env, node->depth);
        case NodeKind::Lambda:
        case NodeKind::Fix: return Value::closure(std::make_shared<const Closure>(Closure{node, env, owner_}));
        case NodeKind::If: {
          const Value c = eval(node->children[0].get(), env);
          node = want_bool(c, "if") ? node->children[1].get() : node->children[2].get();
          continue;
        }
        case NodeKind::Let: {
          Value v = eval(node->children[0].get(), env);
          env = push(std::move(env), std::move(v));
          node = node->children[1].get();
          continue;
        }
        case NodeKind::Apply: {
          Value fn = eval(node->children[0].get(), env);
          Value arg = eval(node->children[1].get(), env);
          // Tail position: rebind and loop instead of recursing.
          for (;;) {
            if (!fn.is_closure()) type_error(std::string("cannot apply a ") + kind_name(fn.kind()) + " value");
            const Closure& c = fn.as_closure();
            if (c.node->kind == NodeKind::Lambda) {
              env = push(c.env, std::move(arg));
              node = c.node->children[0].get();
              break;
            }
            tick();
            Value unrolled = eval(c.node->children[0].get(), push(c.env, fn));
            fn = std::move(unrolled);
          }
          continue;
        }
        case NodeKind::Prim: return call(node, env);
      }
    }
  }

  Value apply(Value fn, Value arg) {
    DepthGuard guard(*this);
    for (;;) {
      if (!fn.is_closure()) type_error(std::string("cannot apply a ") + kind_name(fn.kind()) + " value");
      const Closure& c = fn.as_closure();
      if (c.node->kind == NodeKind::Lambda) return eval(c.node->children[0].get(), push(c.env, std::move(arg)));
      tick();
      Value unrolled = eval(c.node->children[0].get(), push(c.env, fn));
      fn = std::move(unrolled);
    }
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Machine& m) : m(m) {
      if (++m.depth_ > m.budget_.max_depth) runtime_error("recursion depth limit exceeded");
    }
    ~DepthGuard() { --m.depth_; }
    Machine& m;
  };

  void tick(std::int64_t n = 1) {
    if (fuel_ < n) {
      fuel_ = 0;
      throw FuelOut{};
    }
    fuel_ -= n;
  }

  void spend(std::size_t n) { tick(static_cast<std::int64_t>(std::min<std::size_t>(n, std::numeric_limits<std::int64_t>::max()))); }

  static Env push(Env parent, Value v) { return std::make_shared<const Frame>(Frame{std::move(v), std::move(parent)}); }

  static const Value& lookup(const Env& env, std::uint32_t depth) {
    const Frame* f = env.get();
    for (std::uint32_t i = 0; i < depth; ++i) f = f->parent.get();
    return f->value;
  }

  void check_list(std::size_t n, Prim p) const {
    if (n > budget_.max_list_len) runtime_error(op_name(p) + ": list length limit exceeded");
  }

  void check_str(std::size_t n, Prim p) const {
    if (n > budget_.max_str_len) runtime_error(op_name(p) + ": string length limit exceeded");
  }

  Value make_list(Value::List items, Prim p) {
    check_list(items.size(), p);
    return Value::list(std::move(items));
  }

  Value make_str(std::string s, Prim p) {
    check_str(s.size(), p);
    return Value::string(std::move(s));
  }

  Value call(const Node* node, const Env& env) {
    const Prim p = node->prim;
    Value a[3];
    for (std::size_t i = 0; i < node->children.size(); ++i) a[i] = eval(node->children[i].get(), env);

    switch (p) {
      case Prim::Add: {
        std::int64_t r;
        const bool overflow = __builtin_add_overflow(want_int(a[0], p), want_int(a[1], p), &r);
        return Value::integer(checked(overflow, r, p));
      }
      case Prim::Sub: {
        std::int64_t r;
        const bool overflow = __builtin_sub_overflow(want_int(a[0], p), want_int(a[1], p), &r);
        return Value::integer(checked(overflow, r, p));
      }
      case Prim::Mul: {
        std::int64_t r;
        const bool overflow = __builtin_mul_overflow(want_int(a[0], p), want_int(a[1], p), &r);
        return Value::integer(checked(overflow, r, p));
      }
      case Prim::Div: {
        const std::int64_t x = want_int(a[0], p), y = want_int(a[1], p);
        if (y == 0) runtime_error("/: division by zero");
        if (x == std::numeric_limits<std::int64_t>::min() && y == -1) runtime_error("/: integer overflow");
        std::int64_t q = x / y;
        if (x % y != 0 && ((x < 0) != (y < 0))) --q;
        return Value::integer(q);
      }
      case Prim::Mod: {
        const std::int64_t x = want_int(a[0], p), y = want_int(a[1], p);
        if (y == 0) runtime_error("mod: division by zero");
        if (y == -1) return Value::integer(0);
        std::int64_t r = x % y;
        if (r != 0 && ((r < 0) != (y < 0))) r += y;
        return Value::integer(r);
      }
      case Prim::Neg:
      case Prim::Abs: {
        const std::int64_t x = want_int(a[0], p);
        if (p == Prim::Abs && x >= 0) return Value::integer(x);
        if (x == std::numeric_limits<std::int64_t>::min()) runtime_error(op_name(p) + ": integer overflow");
        return Value::integer(-x);
      }
      case Prim::Min: return Value::integer(std::min(want_int(a[0], p), want_int(a[1], p)));
      case Prim::Max: return Value::integer(std::max(want_int(a[0], p), want_int(a[1], p)));

      case Prim::Eq:
        want_data(a[0], p);
        want_data(a[1], p);
        return Value::boolean(a[0] == a[1]);
      case Prim::Lt:
      case Prim::Gt: {
        int c = 0;
        if (a[0].is_int() && a[1].is_int()) {
          c = a[0].as_int() < a[1].as_int() ? -1 : (a[0].as_int() > a[1].as_int() ? 1 : 0);
        } else if (a[0].is_str() && a[1].is_str()) {
          c = a[0].as_str().compare(a[1].as_str());
        } else {
          type_error(op_name(p) + ": expected Int Int or Str Str, got " + kind_name(a[0].kind()) + " " + kind_name(a[1].kind()));
        }
        return Value::boolean(p == Prim::Lt ? c < 0 : c > 0);
      }

      case Prim::And: return Value::boolean(want_bool(a[0], "and") && want_bool(a[1], "and"));
      case Prim::Or: {
        const bool x = want_bool(a[0], "or");
        const bool y = want_bool(a[1], "or");
        return Value::boolean(x || y);
      }
      case Prim::Not: return Value::boolean(!want_bool(a[0], "not"));

      case Prim::Head: {
        const auto& xs = want_list(a[0], p);
        if (xs.empty()) runtime_error("head: empty list");
        return xs.front();
      }
      case Prim::Tail: {
        const auto& xs = want_list(a[0], p);
        if (xs.empty()) runtime_error("tail: empty list");
        spend(xs.size());
        return Value::list(Value::List(xs.begin() + 1, xs.end()));
      }
      case Prim::Cons: {
        const auto& xs = want_list(a[1], p);
        check_list(xs.size() + 1, p);
        spend(xs.size());
        Value::List out;
        out.reserve(xs.size() + 1);
        out.push_back(a[0]);
        out.insert(out.end(), xs.begin(), xs.end());
        return Value::list(std::move(out));
      }
      case Prim::Append: {
        const auto& xs = want_list(a[0], p);
        const auto& ys = want_list(a[1], p);
        check_list(xs.size() + ys.size(), p);
        spend(xs.size() + ys.size());
        Value::List out(xs);
        out.insert(out.end(), ys.begin(), ys.end());
        return Value::list(std::move(out));
      }
      case Prim::Reverse: {
        if (a[0].is_str()) {
          spend(a[0].as_str().size());
          return Value::string(std::string(a[0].as_str().rbegin(), a[0].as_str().rend()));
        }
        const auto& xs = want_list(a[0], p);
        spend(xs.size());
        return Value::list(Value::List(xs.rbegin(), xs.rend()));
      }
      case Prim::Length:
        if (a[0].is_str()) return Value::integer(static_cast<std::int64_t>(a[0].as_str().size()));
        return Value::integer(static_cast<std::int64_t>(want_list(a[0], p).size()));
      case Prim::Sort: {
        const auto& xs = want_list(a[0], p);
        if (!xs.empty()) {
          const bool ints = xs.front().is_int();
          for (const auto& x : xs)
            if (!(ints ? x.is_int() : x.is_str())) type_error("sort: expected a list of Int or a list of Str");
        }
        spend(xs.size());
        Value::List out(xs);
        std::stable_sort(out.begin(), out.end(), [](const Value& l, const Value& r) { return compare(l, r) < 0; });
        return Value::list(std::move(out));
      }
      case Prim::Map: {
        const auto& xs = want_list(a[1], p);
        Value::List out;
        out.reserve(xs.size());
        for (const auto& x : xs) out.push_back(apply(a[0], x));
        return Value::list(std::move(out));
      }
      case Prim::Filter: {
        const auto& xs = want_list(a[1], p);
        Value::List out;
        for (const auto& x : xs)
          if (want_bool(apply(a[0], x), "filter predicate")) out.push_back(x);
        return Value::list(std::move(out));
      }
      case Prim::Fold: {
        const auto& xs = want_list(a[2], p);
        Value acc = a[1];
        for (const auto& x : xs) acc = apply(apply(a[0], std::move(acc)), x);
        return acc;
      }
      case Prim::Range: {
        const std::int64_t n = want_int(a[0], p);
        if (n <= 0) return Value::list({});
        if (static_cast<std::uint64_t>(n) > budget_.max_list_len) runtime_error("range: list length limit exceeded");
        spend(static_cast<std::size_t>(n));
        Value::List out;
        out.reserve(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) out.push_back(Value::integer(i));
        return Value::list(std::move(out));
      }
      case Prim::Index: {
        const std::int64_t i = want_int(a[1], p);
        if (a[0].is_str()) {
          const auto& s = a[0].as_str();
          if (i < 0 || static_cast<std::uint64_t>(i) >= s.size()) runtime_error("index: out of range");
          return Value::string(std::string(1, s[static_cast<std::size_t>(i)]));
        }
        const auto& xs = want_list(a[0], p);
        if (i < 0 || static_cast<std::uint64_t>(i) >= xs.size()) runtime_error("index: out of range");
        return xs[static_cast<std::size_t>(i)];
      }
      case Prim::Take:
      case Prim::Drop: {
        const std::int64_t n = want_int(a[0], p);
        if (a[1].is_str()) {
          const auto& s = a[1].as_str();
          const std::size_t k = clamp_count(n, s.size());
          spend(s.size());
          return Value::string(p == Prim::Take ? s.substr(0, k) : s.substr(k));
        }
        const auto& xs = want_list(a[1], p);
        const std::size_t k = clamp_count(n, xs.size());
        spend(xs.size());
        return p == Prim::Take ? Value::list(Value::List(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(k)))
                               : Value::list(Value::List(xs.begin() + static_cast<std::ptrdiff_t>(k), xs.end()));
      }
      case Prim::Unique: {
        const auto& xs = want_list(a[0], p);
        for (const auto& x : xs) want_data(x, p);
        spend(xs.size());
        auto less = [](const Value& l, const Value& r) { return compare(l, r) < 0; };
        std::set<Value, decltype(less)> seen(less);
        Value::List out;
        for (const auto& x : xs)
          if (seen.insert(x).second) out.push_back(x);
        return Value::list(std::move(out));
      }
      case Prim::Count: {
        const auto& xs = want_list(a[1], p);
        want_data(a[0], p);
        spend(xs.size());
        std::int64_t n = 0;
        for (const auto& x : xs) {
          want_data(x, p);
          if (x == a[0]) ++n;
        }
        return Value::integer(n);
      }

      case Prim::Concat: {
        const auto& s = want_str(a[0], p);
        const auto& t = want_str(a[1], p);
        check_str(s.size() + t.size(), p);
        spend(s.size() + t.size());
        return Value::string(s + t);
      }
      case Prim::Split: {
        const auto& s = want_str(a[0], p);
        const auto& sep = want_str(a[1], p);
        if (sep.empty()) runtime_error("split: empty separator");
        spend(s.size());
        Value::List out;
        std::size_t start = 0;
        for (;;) {
          const std::size_t hit = s.find(sep, start);
          if (hit == std::string::npos) break;
          out.push_back(Value::string(s.substr(start, hit - start)));
          start = hit + sep.size();
        }
        out.push_back(Value::string(s.substr(start)));
        return make_list(std::move(out), p);
      }
      case Prim::Join: {
        const auto& sep = want_str(a[0], p);
        const auto& xs = want_list(a[1], p);
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          if (i) out += sep;
          out += want_str(xs[i], p);
          check_str(out.size(), p);
        }
        spend(out.size());
        return Value::string(std::move(out));
      }
      case Prim::Substr: {
        const auto& s = want_str(a[0], p);
        const std::size_t start = clamp_count(want_int(a[1], p), s.size());
        const std::size_t len = clamp_count(want_int(a[2], p), s.size() - start);
        spend(len);
        return Value::string(s.substr(start, len));
      }
      case Prim::Upper:
      case Prim::Lower: {
        std::string s = want_str(a[0], p);
        spend(s.size());
        for (char& c : s) {
          if (p == Prim::Upper && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
          if (p == Prim::Lower && c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        }
        return Value::string(std::move(s));
      }
      case Prim::Replace: {
        const auto& s = want_str(a[0], p);
        const auto& from = want_str(a[1], p);
        const auto& to = want_str(a[2], p);
        if (from.empty()) runtime_error("replace: empty pattern");
        std::string out;
        std::size_t start = 0;
        for (;;) {
          const std::size_t hit = s.find(from, start);
          if (hit == std::string::npos) break;
          out.append(s, start, hit - start);
          out += to;
          check_str(out.size(), p);
          start = hit + from.size();
        }
        out.append(s, start, std::string::npos);
        spend(out.size());
        return make_str(std::move(out), p);
      }
      case Prim::Find: {
        const auto& s = want_str(a[0], p);
        const auto& sub = want_str(a[1], p);
        spend(s.size());
        const std::size_t hit = s.find(sub);
        return Value::integer(hit == std::string::npos ? -1 : static_cast<std::int64_t>(hit));
      }
      case Prim::StrToInt: {
        const auto& s = want_str(a[0], p);
        std::size_t i = 0;
        bool negative = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
        if (i == s.size()) runtime_error("str->int: not an integer: \"" + s + "\"");
        std::int64_t v = 0;
        for (; i < s.size(); ++i) {
          if (s[i] < '0' || s[i] > '9') runtime_error("str->int: not an integer: \"" + s + "\"");
          const int digit = s[i] - '0';
          if (__builtin_mul_overflow(v, 10, &v) || __builtin_sub_overflow(v, digit, &v))
            runtime_error("str->int: integer overflow");
        }
        // Accumulated as a negative number so that INT64_MIN parses.
        if (!negative) {
          if (v == std::numeric_limits<std::int64_t>::min()) runtime_error("str->int: integer overflow");
          v = -v;
        }
        return Value::integer(v);
      }
      case Prim::IntToStr: return Value::string(std::to_string(want_int(a[0], p)));
      case Prim::Trim: {
        const auto& s = want_str(a[0], p);
        std::size_t b = 0, e = s.size();
        while (b < e && is_space(s[b])) ++b;
        while (e > b && is_space(s[e - 1])) --e;
        return Value::string(s.substr(b, e - b));
      }
    }
    throw std::logic_error("unhandled primitive");
  }

  EvalBudget budget_;
  std::int64_t fuel_;
  std::size_t depth_ = 0;
  NodePtr owner_;
};

}  // namespace

EvalOutcome eval(const SyntaxTree& program, const Value& input, const EvalBudget& budget) {
  if (program.empty()) throw std::invalid_argument("eval: empty program");
  if (budget.fuel <= 0) throw std::invalid_argument("eval: fuel must be positive");
  Machine machine(budget, program.root_ptr());
  EvalOutcome out;
  try {
    Value v = machine.eval(&program.root(), nullptr);
    if (v.is_closure()) v = machine.apply(std::move(v), input);
    out.value = std::move(v);
  } catch (const FuelOut&) {
    out.status = EvalStatus::FuelExhausted;
    out.detail = "fuel exhausted";
  } catch (const Fault& f) {
    out.status = f.status;
    out.detail = f.detail;
  }
  out.fuel_used = machine.used();
  return out;
}

}  // namespace pbe::minilang
