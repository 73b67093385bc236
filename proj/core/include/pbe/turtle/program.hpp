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

#ifndef PBE_TURTLE_PROGRAM_HPP_
#define PBE_TURTLE_PROGRAM_HPP_

// Turtle programs are written in an s-expression dialect that is lowered to
// the command tree below:
//
//   (do cmd ...)                 sequence
//   (forward d) (left a) (right a) (penup) (pendown) (teleport x y heading)
//   (loop n cmd ...)             repeat n times
//   (for i n cmd ...)            repeat with i bound to 0..n-1
//   (fork cmd ...)               run, then restore pose and pen exactly
//
// Numeric arguments: decimal literals, HALF_INF INF EPS_DIST EPS_ANGLE, loop
// variables, and (+ a b) (- a b) (* a b) (/ a b).

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pbe/common.hpp"
#include "pbe/minilang/sexpr.hpp"

namespace pbe::turtle {

class MalformedProgram : public Error {
 public:
  using Error::Error;
};

struct TurtleConstants {
  int half_inf = 180;
  int inf = 360;
  double eps_dist = 1.0;   // pixels
  double eps_angle = 1.0;  // degrees

  /// half_inf * eps_angle == 180 and inf == 2 * half_inf.
  bool valid() const;
};

enum class NamedConstant { HalfInf, Inf, EpsDist, EpsAngle };

struct NumExpr {
  enum class Kind { Literal, Constant, LoopVar, Add, Sub, Mul, Div };
  Kind kind = Kind::Literal;
  double literal = 0.0;
  NamedConstant constant = NamedConstant::EpsDist;
  std::string var;  // LoopVar name
  std::vector<NumExpr> operands;
};

struct Command {
  enum class Kind { Seq, Forward, Left, Right, PenUp, PenDown, Teleport, Loop, Fork };
  Kind kind = Kind::Seq;
  std::vector<NumExpr> args;  // Forward/Left/Right: 1, Teleport: 3, Loop: 1 (count)
  std::string loop_var;       // Loop only; empty when unnamed
  std::vector<Command> body;  // Seq, Loop, Fork
};

inline constexpr int k_max_nesting = 16;

struct Program {
  Command root;
};

/// Throws sexpr::ParseError on bad syntax and MalformedProgram on unknown
/// commands, wrong arity, unbound loop variables or nesting beyond 16.
Program parse(std::string_view source);
Program lower(const sexpr::Datum& datum);

sexpr::Datum to_datum(const Program& program);
std::string print(const Program& program);

/// Count of commands and numeric-expression nodes.
std::size_t size(const Program& program);

/// Shortest round-tripping decimal text; integral values print without a point.
std::string format_number(double v);

}  // namespace pbe::turtle

#endif  // PBE_TURTLE_PROGRAM_HPP_
