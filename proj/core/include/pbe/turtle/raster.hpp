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

#ifndef PBE_TURTLE_RASTER_HPP_
#define PBE_TURTLE_RASTER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pbe/turtle/vm.hpp"

namespace pbe::turtle {

inline constexpr int k_crop_px = 512;
inline constexpr int k_canvas_px = 768;
inline constexpr int k_stroke_px = 3;

/// Monochrome bitmap, row-major from the top-left pixel; true is black.
class BitCanvas {
 public:
  BitCanvas(int width, int height, bool black = false);

  int width() const { return width_; }
  int height() const { return height_; }
  bool get(int row, int col) const { return bits_[index(row, col)] != 0; }
  void set(int row, int col, bool black = true) { bits_[index(row, col)] = black ? 1 : 0; }
  std::size_t black_count() const;

  /// Square window starting at (top, left); must lie inside the canvas.
  BitCanvas crop(int top, int left, int size) const;

  friend bool operator==(const BitCanvas&, const BitCanvas&) = default;

 private:
  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row) * width_ + col; }
  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

/// Draws every segment as a Bresenham line stamped with a stroke_px square
/// brush on a canvas_px square canvas (origin at its center, +y up), then
/// returns the central 512x512 crop. Pixel centers: col = floor(c + x + 0.5),
/// row = floor(c - y + 0.5) with c = canvas_px / 2.
BitCanvas rasterize(const PathTrace& trace, int canvas_px = k_canvas_px, int stroke_px = k_stroke_px);

/// Binary PGM (P5), maxval 255, black written as 0.
std::string write_pgm(const BitCanvas& canvas);

/// Accepts P5 with maxval up to 65535; a pixel is black when its value is
/// below (maxval + 1) / 2. Throws pbe::Error on malformed input.
BitCanvas read_pgm(std::span<const std::uint8_t> bytes);

}  // namespace pbe::turtle

#endif  // PBE_TURTLE_RASTER_HPP_
