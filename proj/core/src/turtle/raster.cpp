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

#include "pbe/turtle/raster.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace pbe::turtle {

BitCanvas::BitCanvas(int width, int height, bool black)
    : width_(width), height_(height), bits_(static_cast<std::size_t>(width) * height, black ? 1 : 0) {
  if (width <= 0 || height <= 0) throw Error("canvas dimensions must be positive");
}

std::size_t BitCanvas::black_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitCanvas BitCanvas::crop(int top, int left, int size) const {
  if (top < 0 || left < 0 || top + size > height_ || left + size > width_) throw Error("crop window outside canvas");
  BitCanvas out(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) out.bits_[out.index(r, c)] = bits_[index(top + r, left + c)];
  return out;
}

namespace {

// Liang-Barsky clip of a continuous segment to [lo, hi] on both axes.
bool clip(double& x0, double& y0, double& x1, double& y1, double lo, double hi) {
  double t0 = 0.0, t1 = 1.0;
  const double dx = x1 - x0, dy = y1 - y0;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {x0 - lo, hi - x0, y0 - lo, hi - y0};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return false;
      continue;
    }
    const double t = q[i] / p[i];
    if (p[i] < 0.0) t0 = std::max(t0, t);
    else t1 = std::min(t1, t);
    if (t0 > t1) return false;
  }
  const double ax = x0 + t0 * dx, ay = y0 + t0 * dy;
  const double bx = x0 + t1 * dx, by = y0 + t1 * dy;
  x0 = ax, y0 = ay, x1 = bx, y1 = by;
  return true;
}

void stamp(BitCanvas& canvas, long row, long col, int lo, int hi) {
  for (long r = row + lo; r <= row + hi; ++r) {
    if (r < 0 || r >= canvas.height()) continue;
    for (long c = col + lo; c <= col + hi; ++c) {
      if (c < 0 || c >= canvas.width()) continue;
      canvas.set(static_cast<int>(r), static_cast<int>(c));
    }
  }
}

}  // namespace

BitCanvas rasterize(const PathTrace& trace, int canvas_px, int stroke_px) {
  if (canvas_px < k_crop_px) throw Error("canvas must be at least 512 pixels");
  if (stroke_px < 1) throw Error("stroke width must be positive");
  BitCanvas canvas(canvas_px, canvas_px);
  const double center = canvas_px / 2;
  // An odd brush is centered; an even one leans up and left by one pixel.
  const int lo = -(stroke_px / 2);
  const int hi = lo + stroke_px - 1;
  const double margin = stroke_px + 1.0;
  for (const auto& s : trace.segments) {
    double x0 = center + s.x0, y0 = center - s.y0, x1 = center + s.x1, y1 = center - s.y1;
    if (!(std::isfinite(x0) && std::isfinite(y0) && std::isfinite(x1) && std::isfinite(y1))) continue;
    if (!clip(x0, y0, x1, y1, -margin, canvas_px + margin)) continue;
    long c0 = std::lround(std::floor(x0 + 0.5)), r0 = std::lround(std::floor(y0 + 0.5));
    const long c1 = std::lround(std::floor(x1 + 0.5)), r1 = std::lround(std::floor(y1 + 0.5));
    const long dc = std::labs(c1 - c0), dr = -std::labs(r1 - r0);
    const long sc = c0 < c1 ? 1 : -1, sr = r0 < r1 ? 1 : -1;
    long err = dc + dr;
    while (true) {
      stamp(canvas, r0, c0, lo, hi);
      if (c0 == c1 && r0 == r1) break;
      const long e2 = 2 * err;
      if (e2 >= dr) {
        err += dr;
        c0 += sc;
      }
      if (e2 <= dc) {
        err += dc;
        r0 += sr;
      }
    }
  }
  const int offset = (canvas_px - k_crop_px) / 2;
  return canvas.crop(offset, offset, k_crop_px);
}

std::string write_pgm(const BitCanvas& canvas) {
  std::string out = "P5\n" + std::to_string(canvas.width()) + " " + std::to_string(canvas.height()) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(canvas.width()) * canvas.height());
  for (int r = 0; r < canvas.height(); ++r)
    for (int c = 0; c < canvas.width(); ++c) out.push_back(canvas.get(r, c) ? '\0' : '\xff');
  return out;
}

BitCanvas read_pgm(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(bytes[pos])) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto number = [&] {
    skip_space();
    long v = 0;
    std::size_t start = pos;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
      v = v * 10 + (bytes[pos] - '0');
      if (v > 1'000'000) throw Error("PGM header value too large");
      ++pos;
    }
    if (pos == start) throw Error("malformed PGM header");
    return v;
  };
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') throw Error("not a binary PGM (P5)");
  pos = 2;
  const long width = number(), height = number(), maxval = number();
  if (width <= 0 || height <= 0 || maxval <= 0 || maxval > 65535) throw Error("bad PGM dimensions or maxval");
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) throw Error("malformed PGM header");
  ++pos;
  const std::size_t depth = maxval > 255 ? 2 : 1;
  const std::size_t need = static_cast<std::size_t>(width) * height * depth;
  if (bytes.size() - pos < need) throw Error("truncated PGM pixel data");
  BitCanvas canvas(static_cast<int>(width), static_cast<int>(height));
  const long threshold = (maxval + 1) / 2;
  for (long r = 0; r < height; ++r) {
    for (long c = 0; c < width; ++c) {
      long v = bytes[pos];
      if (depth == 2) v = (v << 8) | bytes[pos + 1];
      pos += depth;
      if (v < threshold) canvas.set(static_cast<int>(r), static_cast<int>(c));
    }
  }
  return canvas;
}

}  // namespace pbe::turtle
