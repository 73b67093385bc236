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

#include "pbe/turtle/ascii.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace pbe::turtle {

void AsciiGrid::set(int row, int col, int level) {
  if (level < 0 || level > 9) throw Error("grid level out of range: " + std::to_string(level));
  cells_[row * k_grid_size + col] = static_cast<std::uint8_t>(level);
}

std::string AsciiGrid::text() const {
  std::string out;
  out.reserve(k_grid_size * (k_grid_size + 1));
  for (int r = 0; r < k_grid_size; ++r) {
    if (r > 0) out.push_back('\n');
    for (int c = 0; c < k_grid_size; ++c) out.push_back(static_cast<char>('0' + at(r, c)));
  }
  return out;
}

AsciiGrid AsciiGrid::from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (lines.size() == k_grid_size + 1 && lines.back().empty()) lines.pop_back();
  if (lines.size() != k_grid_size)
    throw DimensionMismatch("grid has " + std::to_string(lines.size()) + " rows, expected 32");
  AsciiGrid grid;
  for (int r = 0; r < k_grid_size; ++r) {
    if (lines[r].size() != k_grid_size)
      throw DimensionMismatch("grid row " + std::to_string(r) + " has " + std::to_string(lines[r].size()) +
                              " columns, expected 32");
    for (int c = 0; c < k_grid_size; ++c) {
      const char ch = lines[r][c];
      if (ch < '0' || ch > '9') throw Error("grid cell is not a digit");
      grid.cells_[r * k_grid_size + c] = static_cast<std::uint8_t>(ch - '0');
    }
  }
  return grid;
}

AsciiGrid to_ascii(const BitCanvas& canvas) {
  if (canvas.width() != k_crop_px || canvas.height() != k_crop_px)
    throw DimensionMismatch("canvas is " + std::to_string(canvas.width()) + "x" + std::to_string(canvas.height()) +
                            ", expected 512x512");
  AsciiGrid grid;
  for (int br = 0; br < k_grid_size; ++br) {
    for (int bc = 0; bc < k_grid_size; ++bc) {
      int black = 0;
      for (int r = br * k_block_px; r < (br + 1) * k_block_px; ++r)
        for (int c = bc * k_block_px; c < (bc + 1) * k_block_px; ++c) black += canvas.get(r, c) ? 1 : 0;
      // Integer form of floor(10 * black / 256), avoiding float rounding.
      grid.set(br, bc, std::min(9, black * 10 / (k_block_px * k_block_px)));
    }
  }
  return grid;
}

int grid_distance(const AsciiGrid& a, const AsciiGrid& b) {
  int total = 0;
  for (int r = 0; r < k_grid_size; ++r)
    for (int c = 0; c < k_grid_size; ++c) total += std::abs(a.at(r, c) - b.at(r, c));
  return total;
}

AsciiGrid render_ascii(const Program& program, const RenderOptions& options) {
  return to_ascii(rasterize(execute(program, options.consts, options.step_cap), options.canvas_px, options.stroke_px));
}

}  // namespace pbe::turtle
