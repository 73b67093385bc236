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

#ifndef PBE_TURTLE_ASCII_HPP_
#define PBE_TURTLE_ASCII_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "pbe/turtle/raster.hpp"

namespace pbe::turtle {

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

inline constexpr int k_grid_size = 32;
inline constexpr int k_block_px = 16;

/// 32x32 density levels 0..9, row 0 at the top.
class AsciiGrid {
 public:
  AsciiGrid() { cells_.fill(0); }

  int at(int row, int col) const { return cells_[row * k_grid_size + col]; }
  /// Level must be in 0..9.
  void set(int row, int col, int level);

  /// 32 lines of 32 digits separated by '\n', no trailing newline.
  std::string text() const;
  /// Inverse of text(); one trailing newline and CRLF line ends are tolerated.
  /// Throws DimensionMismatch on wrong shape and pbe::Error on non-digits.
  static AsciiGrid from_text(std::string_view text);

  friend bool operator==(const AsciiGrid&, const AsciiGrid&) = default;

 private:
  std::array<std::uint8_t, k_grid_size * k_grid_size> cells_;
};

/// Per 16x16 block: level = min(9, floor(10 * black / 256)). The canvas must
/// be exactly 512x512.
AsciiGrid to_ascii(const BitCanvas& canvas);

/// Sum of absolute per-cell differences; 0..9216.
int grid_distance(const AsciiGrid& a, const AsciiGrid& b);

struct RenderOptions {
  TurtleConstants consts;
  std::size_t step_cap = k_default_step_cap;
  int canvas_px = k_canvas_px;
  int stroke_px = k_stroke_px;
};

/// execute, rasterize and quantize in one call.
AsciiGrid render_ascii(const Program& program, const RenderOptions& options = {});

}  // namespace pbe::turtle

#endif  // PBE_TURTLE_ASCII_HPP_
