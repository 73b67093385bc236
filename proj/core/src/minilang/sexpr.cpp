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

#include "pbe/minilang/sexpr.hpp"

#include <charconv>
#include <sstream>

namespace pbe::sexpr {

namespace {

std::string describe(Position p, const std::vector<std::string>& expected, const std::string& message) {
  std::ostringstream out;
  out << "parse error at " << p.line << ":" << p.column << ": " << message;
  if (!expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) out << (i ? " or " : "") << expected[i];
    out << ")";
  }
  return out.str();
}

bool is_delimiter(char c) {
  return c == '(' || c == ')' || c == '"' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool looks_like_integer(std::string_view tok) {
  std::size_t i = (tok.size() > 1 && tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') return false;
  return true;
}

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  Datum read_top() {
    skip_blank();
    if (at_end()) throw ParseError(pos_, {"expression"}, "empty input");
    Datum d = read_expr();
    skip_blank();
    if (!at_end()) throw ParseError(pos_, {"end of input"}, "unexpected trailing text");
    return d;
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek() const { return src_[i_]; }

  char advance() {
    const char c = src_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_blank() {
    while (!at_end()) {
      const char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        return;
      }
    }
  }

  Datum read_expr() {
    const Position start = pos_;
    const char c = peek();
    Datum d;
    if (c == '(') {
      if (++depth_ > k_max_nesting) throw ParseError(start, {}, "nesting deeper than " + std::to_string(k_max_nesting));
      advance();
      std::vector<Datum> items;
      for (;;) {
        skip_blank();
        if (at_end()) throw ParseError(pos_, {")"}, "unclosed parenthesis opened at " + std::to_string(start.line) + ":" + std::to_string(start.column));
        if (peek() == ')') {
          advance();
          break;
        }
        items.push_back(read_expr());
      }
      if (items.empty()) throw ParseError(start, {"expression"}, "empty list");
      --depth_;
      d = Datum::make_list(std::move(items));
    } else if (c == ')') {
      throw ParseError(pos_, {"expression"}, "unexpected ')'");
    } else if (c == '"') {
      d = Datum::make_string(read_string());
    } else {
      d = read_atom();
    }
    d.position = start;
    return d;
  }

  std::string read_string() {
    const Position start = pos_;
    advance();
    std::string out;
    for (;;) {
      if (at_end()) throw ParseError(start, {"\""}, "unterminated string literal");
      char c = advance();
      if (c == '"') return out;
      if (c == '\\') {
        if (at_end()) throw ParseError(pos_, {"escape character"}, "unterminated escape");
        const Position esc = pos_;
        c = advance();
        switch (c) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '\\': out += '\\'; break;
          case '"': out += '"'; break;
          default: throw ParseError(esc, {"n", "t", "r", "\\", "\""}, std::string("unknown escape \\") + c);
        }
      } else {
        out += c;
      }
    }
  }

  Datum read_atom() {
    const Position start = pos_;
    const std::size_t begin = i_;
    while (!at_end() && !is_delimiter(peek())) advance();
    const std::string_view tok = src_.substr(begin, i_ - begin);
    if (tok == "#t") return Datum::make_boolean(true);
    if (tok == "#f") return Datum::make_boolean(false);
    if (tok.front() == '#') throw ParseError(start, {"#t", "#f"}, "bad boolean literal '" + std::string(tok) + "'");
    if (looks_like_integer(tok)) {
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(start, {"64-bit integer"}, "integer literal out of range: " + std::string(tok));
      return Datum::make_integer(v);
    }
    return Datum::make_symbol(std::string(tok));
  }

  // Bounds reader recursion on hostile input such as model output.
  static constexpr int k_max_nesting = 512;

  std::string_view src_;
  std::size_t i_ = 0;
  int depth_ = 0;
  Position pos_;
};

void print_into(const Datum& d, std::string& out) {
  switch (d.kind) {
    case DatumKind::Integer: out += std::to_string(d.integer); break;
    case DatumKind::String: out += quote_string(d.text); break;
    case DatumKind::Boolean: out += d.boolean ? "#t" : "#f"; break;
    case DatumKind::Symbol: out += d.text; break;
    case DatumKind::List:
      out += '(';
      for (std::size_t i = 0; i < d.items.size(); ++i) {
        if (i) out += ' ';
        print_into(d.items[i], out);
      }
      out += ')';
      break;
  }
}

}  // namespace

ParseError::ParseError(Position position, std::vector<std::string> expected, const std::string& message)
    : Error(describe(position, expected, message)), position_(position), expected_(std::move(expected)), detail_(message) {}

Datum Datum::make_integer(std::int64_t v) {
  Datum d;
  d.kind = DatumKind::Integer;
  d.integer = v;
  return d;
}

Datum Datum::make_string(std::string s) {
  Datum d;
  d.kind = DatumKind::String;
  d.text = std::move(s);
  return d;
}

Datum Datum::make_boolean(bool b) {
  Datum d;
  d.kind = DatumKind::Boolean;
  d.boolean = b;
  return d;
}

Datum Datum::make_symbol(std::string name) {
  Datum d;
  d.kind = DatumKind::Symbol;
  d.text = std::move(name);
  return d;
}

Datum Datum::make_list(std::vector<Datum> items) {
  Datum d;
  d.kind = DatumKind::List;
  d.items = std::move(items);
  return d;
}

bool operator==(const Datum& a, const Datum& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case DatumKind::Integer: return a.integer == b.integer;
    case DatumKind::Boolean: return a.boolean == b.boolean;
    case DatumKind::String:
    case DatumKind::Symbol: return a.text == b.text;
    case DatumKind::List: return a.items == b.items;
  }
  return false;
}

Datum read(std::string_view source) { return Reader(source).read_top(); }

std::string print(const Datum& datum) {
  std::string out;
  print_into(datum, out);
  return out;
}

std::string quote_string(std::string_view raw) {
  std::string out = "\"";
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::size_t count_nodes(const Datum& datum) {
  std::size_t n = 1;
  for (const auto& item : datum.items) n += count_nodes(item);
  return n;
}

}  // namespace pbe::sexpr
