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

#ifndef PBE_MINILANG_VALUE_HPP_
#define PBE_MINILANG_VALUE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace pbe::minilang {

struct Closure;  // interpreter-private

enum class ValueKind { Int, Str, Bool, List, Closure };

const char* kind_name(ValueKind kind);

/// Immutable runtime value. Lists share their storage, so copies are cheap.
class Value {
 public:
  using List = std::vector<Value>;

  Value() : v_(std::int64_t{0}) {}

  static Value integer(std::int64_t i) { return Value(Storage(std::in_place_index<0>, i)); }
  static Value string(std::string s) { return Value(Storage(std::in_place_index<1>, std::move(s))); }
  static Value boolean(bool b) { return Value(Storage(std::in_place_index<2>, b)); }
  static Value list(List items);
  static Value closure(std::shared_ptr<const Closure> c) { return Value(Storage(std::in_place_index<4>, std::move(c))); }

  ValueKind kind() const { return static_cast<ValueKind>(v_.index()); }
  bool is_int() const { return v_.index() == 0; }
  bool is_str() const { return v_.index() == 1; }
  bool is_bool() const { return v_.index() == 2; }
  bool is_list() const { return v_.index() == 3; }
  bool is_closure() const { return v_.index() == 4; }

  std::int64_t as_int() const { return std::get<0>(v_); }
  const std::string& as_str() const { return std::get<1>(v_); }
  bool as_bool() const { return std::get<2>(v_); }
  const List& as_list() const { return *std::get<3>(v_); }
  const Closure& as_closure() const { return *std::get<4>(v_); }
  const std::shared_ptr<const Closure>& closure_ptr() const { return std::get<4>(v_); }

  /// True when no closure occurs anywhere inside.
  bool is_data() const;

  /// Structural equality; closures compare by identity.
  friend bool operator==(const Value& a, const Value& b);

  /// Display form used in prompts and logs: [1, 2], "text", true.
  std::string repr() const;

 private:
  using Storage = std::variant<std::int64_t, std::string, bool, std::shared_ptr<const List>, std::shared_ptr<const Closure>>;
  explicit Value(Storage v) : v_(std::move(v)) {}
  Storage v_;
};

/// Total order over closure-free values: Int < Str < Bool < List, then by content.
int compare(const Value& a, const Value& b);

/// JSON mapping: numbers, strings, booleans and arrays. Closures have no
/// encoding; to_json throws pbe::Error on them. value_from_json rejects
/// floats, null and objects.
nlohmann::json to_json(const Value& v);
Value value_from_json(const nlohmann::json& j);

}  // namespace pbe::minilang

#endif  // PBE_MINILANG_VALUE_HPP_
