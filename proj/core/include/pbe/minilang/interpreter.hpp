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

#ifndef PBE_MINILANG_INTERPRETER_HPP_
#define PBE_MINILANG_INTERPRETER_HPP_

#include <cstdint>
#include <string>

#include "pbe/minilang/syntax.hpp"
#include "pbe/minilang/value.hpp"

namespace pbe::minilang {

struct EvalBudget {
  /// Reduction steps. Each node visit costs one; bulk primitives also pay one
  /// per element they traverse or produce.
  std::int64_t fuel = 100'000;
  std::size_t max_list_len = 10'000;
  std::size_t max_str_len = 100'000;
  /// Nesting of non-tail evaluations (arguments, higher-order callbacks).
  /// Tail calls do not count. Exceeding it is a RuntimeError.
  std::size_t max_depth = 2'000;
};

enum class EvalStatus { Ok, FuelExhausted, TypeError, RuntimeError };

const char* status_name(EvalStatus status);

struct EvalOutcome {
  EvalStatus status = EvalStatus::Ok;
  Value value;         // meaningful only when ok()
  std::string detail;  // error description otherwise
  std::int64_t fuel_used = 0;

  bool ok() const { return status == EvalStatus::Ok; }
  friend bool operator==(const EvalOutcome& a, const EvalOutcome& b);
};

/// Runs a program on one input. A program whose value is a function is
/// applied to `input`; any other value is the program's constant output.
/// Pure: no I/O, no clocks, no shared state.
EvalOutcome eval(const SyntaxTree& program, const Value& input, const EvalBudget& budget = {});

}  // namespace pbe::minilang

#endif  // PBE_MINILANG_INTERPRETER_HPP_
