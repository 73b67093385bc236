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

#ifndef PBE_MINILANG_SEXPR_HPP_
#define PBE_MINILANG_SEXPR_HPP_

// Generic s-expression reader and canonical printer. Both minilang and the
// turtle dialect are read through here, and the grammar proposer works on
// Datum trees directly so that it is agnostic of which dialect it samples.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pbe/common.hpp"

namespace pbe::sexpr {

struct Position {
  int line = 1;
  int column = 1;
};

/// Raised for malformed source. `expected` lists what would have been
/// accepted at `position` (may be empty for semantic errors).
class ParseError : public Error {
 public:
  ParseError(Position position, std::vector<std::string> expected, const std::string& message);

  Position position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& detail() const { return detail_; }

 private:
  Position position_;
  std::vector<std::string> expected_;
  std::string detail_;
};

enum class DatumKind { Integer, String, Boolean, Symbol, List };

struct Datum {
  DatumKind kind = DatumKind::Symbol;
  std::int64_t integer = 0;
  bool boolean = false;
  std::string text;  // symbol name, or decoded string contents
  std::vector<Datum> items;
  Position position;

  static Datum make_integer(std::int64_t v);
  static Datum make_string(std::string s);
  static Datum make_boolean(bool b);
  static Datum make_symbol(std::string name);
  static Datum make_list(std::vector<Datum> items);

  bool is_list() const { return kind == DatumKind::List; }
  bool is_symbol() const { return kind == DatumKind::Symbol; }
  bool is_symbol(std::string_view name) const { return kind == DatumKind::Symbol && text == name; }

  /// Structural equality; positions are ignored.
  friend bool operator==(const Datum& a, const Datum& b);
};

/// Reads exactly one expression; trailing non-whitespace is an error.
/// `;` starts a comment running to end of line.
Datum read(std::string_view source);

/// Canonical single-line form: one space between siblings, strings re-escaped.
std::string print(const Datum& datum);

std::string quote_string(std::string_view raw);

/// Number of atoms and lists in the tree.
std::size_t count_nodes(const Datum& datum);

}  // namespace pbe::sexpr

#endif  // PBE_MINILANG_SEXPR_HPP_
