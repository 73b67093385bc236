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

#include "pbe/minilang/value.hpp"

#include <nlohmann/json.hpp>

#include "pbe/common.hpp"

namespace pbe::minilang {

const char* kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::Int: return "Int";
    case ValueKind::Str: return "Str";
    case ValueKind::Bool: return "Bool";
    case ValueKind::List: return "List";
    case ValueKind::Closure: return "Function";
  }
  return "?";
}

Value Value::list(List items) {
  return Value(Storage(std::in_place_index<3>, std::make_shared<const List>(std::move(items))));
}

bool Value::is_data() const {
  if (is_closure()) return false;
  if (is_list())
    for (const auto& item : as_list())
      if (!item.is_data()) return false;
  return true;
}

bool operator==(const Value& a, const Value& b) {
  if (a.v_.index() != b.v_.index()) return false;
  switch (a.kind()) {
    case ValueKind::Int: return a.as_int() == b.as_int();
    case ValueKind::Str: return a.as_str() == b.as_str();
    case ValueKind::Bool: return a.as_bool() == b.as_bool();
    case ValueKind::List: {
      const auto& pa = std::get<3>(a.v_);
      const auto& pb = std::get<3>(b.v_);
      return pa == pb || *pa == *pb;
    }
    case ValueKind::Closure: return a.closure_ptr() == b.closure_ptr();
  }
  return false;
}

int compare(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case ValueKind::Int: return a.as_int() < b.as_int() ? -1 : (a.as_int() > b.as_int() ? 1 : 0);
    case ValueKind::Str: {
      const int c = a.as_str().compare(b.as_str());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case ValueKind::Bool: return a.as_bool() == b.as_bool() ? 0 : (a.as_bool() ? 1 : -1);
    case ValueKind::List: {
      const auto& la = a.as_list();
      const auto& lb = b.as_list();
      for (std::size_t i = 0; i < la.size() && i < lb.size(); ++i)
        if (const int c = compare(la[i], lb[i]); c != 0) return c;
      return la.size() < lb.size() ? -1 : (la.size() > lb.size() ? 1 : 0);
    }
    case ValueKind::Closure: break;
  }
  throw Error("compare: functions are not ordered");
}

std::string Value::repr() const {
  switch (kind()) {
    case ValueKind::Int: return std::to_string(as_int());
    case ValueKind::Str: return nlohmann::json(as_str()).dump();
    case ValueKind::Bool: return as_bool() ? "true" : "false";
    case ValueKind::List: {
      std::string out = "[";
      const auto& items = as_list();
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i].repr();
      }
      return out + "]";
    }
    case ValueKind::Closure: return "<function>";
  }
  return "?";
}

nlohmann::json to_json(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Int: return v.as_int();
    case ValueKind::Str: return v.as_str();
    case ValueKind::Bool: return v.as_bool();
    case ValueKind::List: {
      auto arr = nlohmann::json::array();
      for (const auto& item : v.as_list()) arr.push_back(to_json(item));
      return arr;
    }
    case ValueKind::Closure: break;
  }
  throw Error("a function value cannot be serialized");
}

Value value_from_json(const nlohmann::json& j) {
  if (j.is_boolean()) return Value::boolean(j.get<bool>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      throw Error("integer out of 64-bit range");
    return Value::integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return Value::string(j.get<std::string>());
  if (j.is_array()) {
    Value::List items;
    items.reserve(j.size());
    for (const auto& e : j) items.push_back(value_from_json(e));
    return Value::list(std::move(items));
  }
  throw Error("unsupported JSON value for a minilang Value: " + j.dump());
}

}  // namespace pbe::minilang
