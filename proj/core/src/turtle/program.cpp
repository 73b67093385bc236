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

#include "pbe/turtle/program.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace pbe::turtle {

namespace {

using sexpr::Datum;
using sexpr::DatumKind;

struct ConstantName {
  NamedConstant id;
  std::string_view name;
};

constexpr std::array k_constant_names = {
    ConstantName{NamedConstant::HalfInf, "HALF_INF"},
    ConstantName{NamedConstant::Inf, "INF"},
    ConstantName{NamedConstant::EpsDist, "EPS_DIST"},
    ConstantName{NamedConstant::EpsAngle, "EPS_ANGLE"},
};

[[noreturn]] void malformed(const Datum& at, const std::string& msg) {
  throw MalformedProgram("turtle program at " + std::to_string(at.position.line) + ":" +
                         std::to_string(at.position.column) + ": " + msg);
}

bool parse_decimal(std::string_view text, double& out) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

class Lowerer {
 public:
  Command command(const Datum& d, int nesting) {
    if (!d.is_list() || !d.items[0].is_symbol()) malformed(d, "expected a command form like (forward 10)");
    const std::string& head = d.items[0].text;
    const std::size_t argc = d.items.size() - 1;
    Command c;
    auto numeric_args = [&](std::size_t n) {
      if (argc != n) malformed(d, "'" + head + "' takes " + std::to_string(n) + " argument(s)");
      for (std::size_t i = 1; i <= n; ++i) c.args.push_back(number(d.items[i]));
    };
    auto block = [&](std::size_t first) {
      if (nesting + 1 > k_max_nesting) malformed(d, "nesting deeper than " + std::to_string(k_max_nesting));
      if (first >= d.items.size()) malformed(d, "'" + head + "' needs at least one command");
      for (std::size_t i = first; i < d.items.size(); ++i) c.body.push_back(command(d.items[i], nesting + 1));
    };
    if (head == "do") {
      c.kind = Command::Kind::Seq;
      block(1);
    } else if (head == "forward") {
      c.kind = Command::Kind::Forward;
      numeric_args(1);
    } else if (head == "left") {
      c.kind = Command::Kind::Left;
      numeric_args(1);
    } else if (head == "right") {
      c.kind = Command::Kind::Right;
      numeric_args(1);
    } else if (head == "penup") {
      c.kind = Command::Kind::PenUp;
      numeric_args(0);
    } else if (head == "pendown") {
      c.kind = Command::Kind::PenDown;
      numeric_args(0);
    } else if (head == "teleport") {
      c.kind = Command::Kind::Teleport;
      numeric_args(3);
    } else if (head == "loop") {
      c.kind = Command::Kind::Loop;
      if (argc < 2) malformed(d, "(loop n cmd ...) needs a count and a body");
      c.args.push_back(number(d.items[1]));
      block(2);
    } else if (head == "for") {
      c.kind = Command::Kind::Loop;
      if (argc < 3 || !d.items[1].is_symbol()) malformed(d, "(for i n cmd ...) needs a variable, a count and a body");
      c.loop_var = d.items[1].text;
      double ignored = 0;
      if (is_constant(c.loop_var) || parse_decimal(c.loop_var, ignored)) malformed(d, "bad loop variable '" + c.loop_var + "'");
      c.args.push_back(number(d.items[2]));
      vars_.push_back(c.loop_var);
      block(3);
      vars_.pop_back();
    } else if (head == "fork") {
      c.kind = Command::Kind::Fork;
      block(1);
    } else {
      malformed(d, "unknown command '" + head + "'");
    }
    return c;
  }

 private:
  static bool is_constant(std::string_view s) {
    for (const auto& k : k_constant_names)
      if (k.name == s) return true;
    return false;
  }

  NumExpr number(const Datum& d) {
    NumExpr e;
    switch (d.kind) {
      case DatumKind::Integer:
        e.literal = static_cast<double>(d.integer);
        return e;
      case DatumKind::Symbol: {
        for (const auto& k : k_constant_names) {
          if (k.name == d.text) {
            e.kind = NumExpr::Kind::Constant;
            e.constant = k.id;
            return e;
          }
        }
        for (auto it = vars_.rbegin(); it != vars_.rend(); ++it) {
          if (*it == d.text) {
            e.kind = NumExpr::Kind::LoopVar;
            e.var = d.text;
            return e;
          }
        }
        if (parse_decimal(d.text, e.literal)) return e;
        malformed(d, "unknown numeric symbol '" + d.text + "'");
      }
      case DatumKind::List: {
        if (d.items.size() != 3 || !d.items[0].is_symbol()) malformed(d, "expected (op a b)");
        const std::string& op = d.items[0].text;
        if (op == "+") e.kind = NumExpr::Kind::Add;
        else if (op == "-") e.kind = NumExpr::Kind::Sub;
        else if (op == "*") e.kind = NumExpr::Kind::Mul;
        else if (op == "/") e.kind = NumExpr::Kind::Div;
        else malformed(d, "unknown arithmetic operator '" + op + "'");
        e.operands.push_back(number(d.items[1]));
        e.operands.push_back(number(d.items[2]));
        return e;
      }
      default: malformed(d, "expected a number");
    }
  }

  std::vector<std::string> vars_;
};

Datum num_datum(const NumExpr& e) {
  switch (e.kind) {
    case NumExpr::Kind::Literal: {
      const std::string text = format_number(e.literal);
      if (text.find_first_of(".eE") == std::string::npos && text.find("inf") == std::string::npos)
        return sexpr::read(text);
      return Datum::make_symbol(text);
    }
    case NumExpr::Kind::Constant:
      for (const auto& k : k_constant_names)
        if (k.id == e.constant) return Datum::make_symbol(std::string(k.name));
      break;
    case NumExpr::Kind::LoopVar: return Datum::make_symbol(e.var);
    case NumExpr::Kind::Add:
    case NumExpr::Kind::Sub:
    case NumExpr::Kind::Mul:
    case NumExpr::Kind::Div: {
      const char* op = e.kind == NumExpr::Kind::Add ? "+" : e.kind == NumExpr::Kind::Sub ? "-" : e.kind == NumExpr::Kind::Mul ? "*" : "/";
      return Datum::make_list({Datum::make_symbol(op), num_datum(e.operands[0]), num_datum(e.operands[1])});
    }
  }
  return Datum::make_symbol("?");
}

Datum command_datum(const Command& c) {
  std::vector<Datum> items;
  auto head = [&](const char* h) { items.push_back(Datum::make_symbol(h)); };
  switch (c.kind) {
    case Command::Kind::Seq: head("do"); break;
    case Command::Kind::Forward: head("forward"); break;
    case Command::Kind::Left: head("left"); break;
    case Command::Kind::Right: head("right"); break;
    case Command::Kind::PenUp: head("penup"); break;
    case Command::Kind::PenDown: head("pendown"); break;
    case Command::Kind::Teleport: head("teleport"); break;
    case Command::Kind::Fork: head("fork"); break;
    case Command::Kind::Loop:
      if (c.loop_var.empty()) {
        head("loop");
      } else {
        head("for");
        items.push_back(Datum::make_symbol(c.loop_var));
      }
      break;
  }
  for (const auto& a : c.args) items.push_back(num_datum(a));
  for (const auto& b : c.body) items.push_back(command_datum(b));
  return Datum::make_list(std::move(items));
}

std::size_t count_num(const NumExpr& e) {
  std::size_t n = 1;
  for (const auto& o : e.operands) n += count_num(o);
  return n;
}

std::size_t count_cmd(const Command& c) {
  std::size_t n = 1;
  for (const auto& a : c.args) n += count_num(a);
  for (const auto& b : c.body) n += count_cmd(b);
  return n;
}

}  // namespace

bool TurtleConstants::valid() const {
  return half_inf > 0 && inf == 2 * half_inf && eps_dist > 0 && half_inf * eps_angle == 180.0;
}

Program parse(std::string_view source) { return lower(sexpr::read(source)); }

Program lower(const sexpr::Datum& datum) { return Program{Lowerer().command(datum, 1)}; }

sexpr::Datum to_datum(const Program& program) { return command_datum(program.root); }

std::string print(const Program& program) { return sexpr::print(to_datum(program)); }

std::size_t size(const Program& program) { return count_cmd(program.root); }

std::string format_number(double v) {
  if (v == 0.0) return "0";
  if (std::nearbyint(v) == v && std::fabs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace pbe::turtle
