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

#include <doctest.h>

#include <cmath>
#include <string>

#include "pbe/turtle/ascii.hpp"

using namespace pbe;
using namespace pbe::turtle;

TEST_CASE("dialect round trip") {
  for (const char* src : {"(loop 4 (forward 100) (left 90))", "(for i 10 (forward (* i EPS_DIST)) (right 36))",
                          "(do (penup) (teleport 0 -50 90) (pendown) (fork (forward 20)) (left 45))"}) {
    CHECK(print(parse(src)) == src);
  }
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(0.1) == "0.1");
}

TEST_CASE("malformed programs") {
  CHECK_THROWS_AS(parse("(jump 3)"), MalformedProgram);
  CHECK_THROWS_AS(parse("(forward)"), MalformedProgram);
  CHECK_THROWS_AS(parse("(forward i)"), MalformedProgram);
  CHECK_THROWS_AS(parse("(forward"), sexpr::ParseError);
  std::string deep = "(forward 1)";
  for (int i = 0; i < 20; ++i) deep = "(do " + deep + ")";
  CHECK_THROWS_AS(parse(deep), MalformedProgram);
  CHECK_THROWS_AS(execute(parse("(loop -1 (forward 1))")), MalformedProgram);
  CHECK_THROWS_AS(execute(parse("(forward (/ 1 0))")), MalformedProgram);
}

TEST_CASE("vm poses") {
  const auto t = execute(parse("(do (forward 10) (right 90) (forward 5))"));
  CHECK(t.final_state.x == doctest::Approx(5.0));
  CHECK(t.final_state.y == doctest::Approx(10.0));
  CHECK(t.final_state.heading == doctest::Approx(0.0));
  CHECK(t.segments.size() == 2);
  CHECK(t.steps == 3);
  CHECK(normalize_heading(-90.0) == 270.0);
  CHECK(normalize_heading(720.0) == 0.0);
}

TEST_CASE("fork restores pose and pen") {
  const auto t = execute(parse("(do (fork (penup) (left 30) (forward 40)) (forward 1))"));
  CHECK(t.final_state.x == doctest::Approx(0.0));
  CHECK(t.final_state.y == doctest::Approx(1.0));
  CHECK(t.final_state.pen_down);
  CHECK(t.segments.size() == 1);
}

TEST_CASE("pen up and zero-length moves draw nothing") {
  CHECK(execute(parse("(do (penup) (forward 50))")).segments.empty());
  CHECK(execute(parse("(forward 0)")).segments.empty());
  CHECK(render_ascii(parse("(forward 0)")) == AsciiGrid());
}

TEST_CASE("step cap") {
  CHECK_THROWS_AS(execute(parse("(loop 100 (forward 1))"), {}, 99), StepCapExceeded);
  CHECK(execute(parse("(loop 100 (forward 1))"), {}, 100).steps == 100);
}

TEST_CASE("constants") {
  TurtleConstants c;
  CHECK(c.valid());
  c.half_inf = 90;
  CHECK_FALSE(c.valid());
}

TEST_CASE("pixel placement") {
  PathTrace trace;
  trace.segments.push_back({0, 0, 10, 0});
  const auto canvas = rasterize(trace, k_canvas_px, 1);
  CHECK(canvas.width() == k_crop_px);
  CHECK(canvas.black_count() == 11);
  // center of the 768 canvas maps to (256, 256) in the crop
  CHECK(canvas.get(256, 256));
  CHECK(canvas.get(256, 266));
  CHECK_FALSE(canvas.get(256, 267));
  CHECK(rasterize(trace, k_canvas_px, 3).black_count() == 13 * 3);
}

TEST_CASE("ascii quantization") {
  BitCanvas c(512, 512);
  // 26 black pixels in block (1, 2): floor(260 / 256) = 1
  for (int i = 0; i < 26; ++i) c.set(16 + i / 16, 32 + i % 16);
  const auto g = to_ascii(c);
  CHECK(g.at(1, 2) == 1);
  CHECK(g.at(0, 0) == 0);
  CHECK_THROWS_AS(to_ascii(BitCanvas(100, 100)), DimensionMismatch);
}

TEST_CASE("grid text") {
  AsciiGrid g;
  g.set(0, 0, 9);
  g.set(31, 31, 3);
  const auto text = g.text();
  CHECK(text.size() == 32 * 33 - 1);
  CHECK(AsciiGrid::from_text(text) == g);
  CHECK(AsciiGrid::from_text(text + "\n") == g);
  CHECK_THROWS_AS(AsciiGrid::from_text("123"), DimensionMismatch);
  CHECK(grid_distance(g, AsciiGrid()) == 12);
}

TEST_CASE("pgm codec") {
  BitCanvas c(4, 3);
  c.set(1, 2);
  const auto bytes = write_pgm(c);
  CHECK(bytes.rfind("P5", 0) == 0);
  const auto back = read_pgm(std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
  CHECK(back == c);
  const std::string bad = "P2\n1 1\n255\n0";
  CHECK_THROWS_AS(read_pgm(std::span(reinterpret_cast<const std::uint8_t*>(bad.data()), bad.size())), Error);
}
