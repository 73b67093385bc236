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

#ifndef PBE_TURTLE_VM_HPP_
#define PBE_TURTLE_VM_HPP_

#include <cstddef>
#include <vector>

#include "pbe/turtle/program.hpp"

namespace pbe::turtle {

class StepCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Pose in canvas pixels, origin at the canvas center, +y up. Heading is in
/// degrees, 0 along +x, counterclockwise positive, kept in [0, 360).
struct TurtleState {
  double x = 0.0;
  double y = 0.0;
  double heading = 90.0;
  bool pen_down = true;

  friend bool operator==(const TurtleState&, const TurtleState&) = default;
};

struct Segment {
  double x0, y0, x1, y1;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct PathTrace {
  std::vector<Segment> segments;
  TurtleState final_state;
  std::size_t steps = 0;  // primitive commands executed
};

inline constexpr std::size_t k_default_step_cap = 200'000;

/// Runs a program from the start pose. Primitive commands (forward, left,
/// right, penup, pendown, teleport) each count one step; structural forms are
/// free. Zero-length moves draw nothing. Loop counts must evaluate to an
/// integer in [0, INF]; a bad count or a non-finite argument throws
/// MalformedProgram.
PathTrace execute(const Program& program, const TurtleConstants& consts = {},
                  std::size_t step_cap = k_default_step_cap);

/// Normalizes degrees into [0, 360).
double normalize_heading(double degrees);

}  // namespace pbe::turtle

#endif  // PBE_TURTLE_VM_HPP_
