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

#ifndef PBE_MINILANG_PRIMITIVES_HPP_
#define PBE_MINILANG_PRIMITIVES_HPP_

#include <cstdint>
#include <span>
#include <string_view>

namespace pbe::minilang {

enum class Prim : std::uint8_t {
  // arithmetic
  Add, Sub, Mul, Div, Mod, Neg, Abs, Min, Max,
  // comparison
  Eq, Lt, Gt,
  // booleans
  And, Or, Not,
  // lists
  Head, Tail, Cons, Append, Reverse, Length, Sort, Map, Filter, Fold, Range, Index, Take, Drop, Unique, Count,
  // strings
  Concat, Split, Join, Substr, Upper, Lower, Replace, Find, StrToInt, IntToStr, Trim,
};

struct PrimitiveInfo {
  Prim id;
  std::string_view name;
  int arity;
  std::string_view signature;  // human-readable, used in prompts and docs
};

/// Bumped whenever a primitive is added or its semantics change; recorded in
/// every artifact that stores programs.
inline constexpr int k_primitive_table_version = 1;

std::span<const PrimitiveInfo> primitive_table();
const PrimitiveInfo* find_primitive(std::string_view name);
const PrimitiveInfo& primitive_info(Prim id);

/// lambda, let, if, fix
bool is_reserved(std::string_view symbol);

}  // namespace pbe::minilang

#endif  // PBE_MINILANG_PRIMITIVES_HPP_
