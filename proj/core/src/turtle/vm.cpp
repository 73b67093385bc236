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

#include "pbe/turtle/vm.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

namespace pbe::turtle {

namespace {

// cos/sin of a heading that is exact on the four axis directions, so that
// squares and other right-angle figures close without rounding drift.
void direction(double heading, double& dx, double& dy) {
  if (heading == 0.0) {
    dx = 1.0, dy = 0.0;
  } else if (heading == 90.0) {
    dx = 0.0, dy = 1.0;
  } else if (heading == 180.0) {
    dx = -1.0, dy = 0.0;
  } else if (heading == 270.0) {
    dx = 0.0, dy = -1.0;
  } else {
    const double rad = heading * std::numbers::pi / 180.0;
    dx = std::cos(rad);
    dy = std::sin(rad);
  }
}

class Machine {
 public:
  Machine(const TurtleConstants& consts, std::size_t cap) : consts_(consts), cap_(cap) {}

  void run(const Command& c) {
    switch (c.kind) {
      case Command::Kind::Seq:
        for (const auto& b : c.body) run(b);
        return;
      case Command::Kind::Forward: {
        step();
        const double d = arg(c, 0);
        double dx = 0, dy = 0;
        direction(state_.heading, dx, dy);
        const double nx = state_.x + d * dx;
        const double ny = state_.y + d * dy;
        if (state_.pen_down && d != 0.0) trace_.segments.push_back({state_.x, state_.y, nx, ny});
        state_.x = nx;
        state_.y = ny;
        return;
      }
      case Command::Kind::Left:
        step();
        state_.heading = normalize_heading(state_.heading + arg(c, 0));
        return;
      case Command::Kind::Right:
        step();
        state_.heading = normalize_heading(state_.heading - arg(c, 0));
        return;
      case Command::Kind::PenUp:
        step();
        state_.pen_down = false;
        return;
      case Command::Kind::PenDown:
        step();
        state_.pen_down = true;
        return;
      case Command::Kind::Teleport:
        step();
        state_.x = arg(c, 0);
        state_.y = arg(c, 1);
        state_.heading = normalize_heading(arg(c, 2));
        return;
      case Command::Kind::Loop: {
        const double n = arg(c, 0);
        if (n != std::floor(n) || n < 0 || n > consts_.inf)
          throw MalformedProgram("loop count " + format_number(n) + " is not an integer in [0, INF]");
        const auto count = static_cast<long long>(n);
        std::vector<double>* slot = c.loop_var.empty() ? nullptr : &vars_[c.loop_var];
        if (slot) slot->push_back(0.0);
        for (long long i = 0; i < count; ++i) {
          if (slot) slot->back() = static_cast<double>(i);
          for (const auto& b : c.body) run(b);
        }
        if (slot) slot->pop_back();
        return;
      }
      case Command::Kind::Fork: {
        const TurtleState saved = state_;
        for (const auto& b : c.body) run(b);
        state_ = saved;
        return;
      }
    }
  }

  PathTrace finish() {
    trace_.final_state = state_;
    return std::move(trace_);
  }

 private:
  void step() {
    if (trace_.steps >= cap_) throw StepCapExceeded("turtle program exceeded " + std::to_string(cap_) + " steps");
    ++trace_.steps;
  }

  double arg(const Command& c, std::size_t i) {
    const double v = value(c.args[i]);
    if (!std::isfinite(v)) throw MalformedProgram("non-finite numeric argument");
    return v;
  }

  double value(const NumExpr& e) {
    switch (e.kind) {
      case NumExpr::Kind::Literal: return e.literal;
      case NumExpr::Kind::Constant:
        switch (e.constant) {
          case NamedConstant::HalfInf: return consts_.half_inf;
          case NamedConstant::Inf: return consts_.inf;
          case NamedConstant::EpsDist: return consts_.eps_dist;
          case NamedConstant::EpsAngle: return consts_.eps_angle;
        }
        break;
      case NumExpr::Kind::LoopVar: {
        const auto it = vars_.find(e.var);
        if (it == vars_.end() || it->second.empty())
          throw MalformedProgram("loop variable '" + e.var + "' read outside its loop");
        return it->second.back();
      }
      case NumExpr::Kind::Add: return value(e.operands[0]) + value(e.operands[1]);
      case NumExpr::Kind::Sub: return value(e.operands[0]) - value(e.operands[1]);
      case NumExpr::Kind::Mul: return value(e.operands[0]) * value(e.operands[1]);
      case NumExpr::Kind::Div: return value(e.operands[0]) / value(e.operands[1]);
    }
    return 0.0;
  }

  TurtleConstants consts_;
  std::size_t cap_;
  TurtleState state_;
  PathTrace trace_;
  // Loop variables may shadow, so each name keeps a stack of bindings.
  std::unordered_map<std::string, std::vector<double>> vars_;
};

}  // namespace

double normalize_heading(double degrees) {
  double h = std::fmod(degrees, 360.0);
  if (h < 0) h += 360.0;
  if (h >= 360.0) h = 0.0;
  return h;
}

PathTrace execute(const Program& program, const TurtleConstants& consts, std::size_t step_cap) {
  if (!consts.valid()) throw MalformedProgram("inconsistent turtle constants");
  Machine m(consts, step_cap);
  m.run(program.root);
  return m.finish();
}

}  // namespace pbe::turtle
