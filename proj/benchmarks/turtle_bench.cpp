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

#include <benchmark/benchmark.h>

#include "pbe/turtle/ascii.hpp"

namespace {

using namespace pbe::turtle;

const char* k_spiral = "(for i 90 (forward (* 2 i)) (right 89))";

void BM_Execute(benchmark::State& state) {
  const auto p = parse(k_spiral);
  for (auto _ : state) benchmark::DoNotOptimize(execute(p));
}
BENCHMARK(BM_Execute);

void BM_Rasterize(benchmark::State& state) {
  const auto trace = execute(parse(k_spiral));
  for (auto _ : state) benchmark::DoNotOptimize(rasterize(trace));
}
BENCHMARK(BM_Rasterize);

void BM_RenderAscii(benchmark::State& state) {
  const auto p = parse("(loop HALF_INF (forward EPS_DIST) (left EPS_ANGLE))");
  for (auto _ : state) benchmark::DoNotOptimize(render_ascii(p));
}
BENCHMARK(BM_RenderAscii);

}  // namespace
