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

#include "pbe/minilang/interpreter.hpp"
#include "pbe/minilang/syntax.hpp"

namespace {

using namespace pbe::minilang;

Value range_list(std::int64_t n) {
  Value::List xs;
  for (std::int64_t i = 0; i < n; ++i) xs.push_back(Value::integer((i * 7919) % 101 - 50));
  return Value::list(std::move(xs));
}

void BM_Parse(benchmark::State& state) {
  const char* src = "(lambda xs (filter (lambda x (< x (fold (lambda a (lambda b (max a b))) (head xs) xs))) xs))";
  for (auto _ : state) benchmark::DoNotOptimize(parse(src));
}
BENCHMARK(BM_Parse);

void BM_MapSort(benchmark::State& state) {
  const auto p = parse("(lambda xs (sort (map (lambda x (* x x)) xs)))");
  const auto input = range_list(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval(p, input));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MapSort)->Range(8, 4096);

void BM_TailLoop(benchmark::State& state) {
  const auto p = parse("(lambda x ((fix f (lambda n (if (= n 0) 0 (f (- n 1))))) x))");
  const auto input = Value::integer(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval(p, input));
}
BENCHMARK(BM_TailLoop)->Arg(1000)->Arg(10000);

}  // namespace
