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

#include "pbe/minilang/primitives.hpp"

#include <array>
#include <stdexcept>

namespace pbe::minilang {

namespace {

constexpr std::array k_table = {
    PrimitiveInfo{Prim::Add, "+", 2, "(+ Int Int) -> Int"},
    PrimitiveInfo{Prim::Sub, "-", 2, "(- Int Int) -> Int"},
    PrimitiveInfo{Prim::Mul, "*", 2, "(* Int Int) -> Int"},
    PrimitiveInfo{Prim::Div, "/", 2, "(/ Int Int) -> Int, floor division"},
    PrimitiveInfo{Prim::Mod, "mod", 2, "(mod Int Int) -> Int, sign of divisor"},
    PrimitiveInfo{Prim::Neg, "neg", 1, "(neg Int) -> Int"},
    PrimitiveInfo{Prim::Abs, "abs", 1, "(abs Int) -> Int"},
    PrimitiveInfo{Prim::Min, "min", 2, "(min Int Int) -> Int"},
    PrimitiveInfo{Prim::Max, "max", 2, "(max Int Int) -> Int"},
    PrimitiveInfo{Prim::Eq, "=", 2, "(= a a) -> Bool, structural"},
    PrimitiveInfo{Prim::Lt, "<", 2, "(< Int Int) -> Bool; also Str Str"},
    PrimitiveInfo{Prim::Gt, ">", 2, "(> Int Int) -> Bool; also Str Str"},
    PrimitiveInfo{Prim::And, "and", 2, "(and Bool Bool) -> Bool"},
    PrimitiveInfo{Prim::Or, "or", 2, "(or Bool Bool) -> Bool"},
    PrimitiveInfo{Prim::Not, "not", 1, "(not Bool) -> Bool"},
    PrimitiveInfo{Prim::Head, "head", 1, "(head (List a)) -> a"},
    PrimitiveInfo{Prim::Tail, "tail", 1, "(tail (List a)) -> (List a)"},
    PrimitiveInfo{Prim::Cons, "cons", 2, "(cons a (List a)) -> (List a)"},
    PrimitiveInfo{Prim::Append, "append", 2, "(append (List a) (List a)) -> (List a)"},
    PrimitiveInfo{Prim::Reverse, "reverse", 1, "(reverse (List a)) -> (List a); also Str"},
    PrimitiveInfo{Prim::Length, "length", 1, "(length (List a)) -> Int; also Str"},
    PrimitiveInfo{Prim::Sort, "sort", 1, "(sort (List Int)) -> (List Int); also (List Str)"},
    PrimitiveInfo{Prim::Map, "map", 2, "(map (a -> b) (List a)) -> (List b)"},
    PrimitiveInfo{Prim::Filter, "filter", 2, "(filter (a -> Bool) (List a)) -> (List a)"},
    PrimitiveInfo{Prim::Fold, "fold", 3, "(fold (b -> a -> b) b (List a)) -> b, left fold"},
    PrimitiveInfo{Prim::Range, "range", 1, "(range Int) -> (List Int), 0..n-1"},
    PrimitiveInfo{Prim::Index, "index", 2, "(index (List a) Int) -> a; also Str"},
    PrimitiveInfo{Prim::Take, "take", 2, "(take Int (List a)) -> (List a); also Str"},
    PrimitiveInfo{Prim::Drop, "drop", 2, "(drop Int (List a)) -> (List a); also Str"},
    PrimitiveInfo{Prim::Unique, "unique", 1, "(unique (List a)) -> (List a), first occurrences in order"},
    PrimitiveInfo{Prim::Count, "count", 2, "(count a (List a)) -> Int"},
    PrimitiveInfo{Prim::Concat, "concat", 2, "(concat Str Str) -> Str"},
    PrimitiveInfo{Prim::Split, "split", 2, "(split Str Str) -> (List Str), separator must be non-empty"},
    PrimitiveInfo{Prim::Join, "join", 2, "(join Str (List Str)) -> Str, separator first"},
    PrimitiveInfo{Prim::Substr, "substr", 3, "(substr Str Int Int) -> Str, start and length clamped"},
    PrimitiveInfo{Prim::Upper, "upper", 1, "(upper Str) -> Str"},
    PrimitiveInfo{Prim::Lower, "lower", 1, "(lower Str) -> Str"},
    PrimitiveInfo{Prim::Replace, "replace", 3, "(replace Str Str Str) -> Str, all occurrences"},
    PrimitiveInfo{Prim::Find, "find", 2, "(find Str Str) -> Int, -1 when absent"},
    PrimitiveInfo{Prim::StrToInt, "str->int", 1, "(str->int Str) -> Int"},
    PrimitiveInfo{Prim::IntToStr, "int->str", 1, "(int->str Int) -> Str"},
    PrimitiveInfo{Prim::Trim, "trim", 1, "(trim Str) -> Str"},
};

}  // namespace

std::span<const PrimitiveInfo> primitive_table() { return k_table; }

const PrimitiveInfo* find_primitive(std::string_view name) {
  for (const auto& p : k_table)
    if (p.name == name) return &p;
  return nullptr;
}

const PrimitiveInfo& primitive_info(Prim id) {
  for (const auto& p : k_table)
    if (p.id == id) return p;
  throw std::logic_error("unknown primitive id");
}

bool is_reserved(std::string_view symbol) {
  return symbol == "lambda" || symbol == "let" || symbol == "if" || symbol == "fix";
}

}  // namespace pbe::minilang
