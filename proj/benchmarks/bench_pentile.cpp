// Copyright 2026 The Pentile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "pentile/angle_classifier.hpp"
#include "pentile/edge_classifier.hpp"
#include "pentile/isolated_search.hpp"
#include "pentile/joint_classifier.hpp"
#include "pentile/sphere_geom.hpp"

namespace {

using namespace pentile;

void BM_EdgeSearch(benchmark::State& state) {
  const DodecGraph& g = dodecahedron();
  for (auto _ : state)
    for (const auto& name : edge_combination_names())
      benchmark::DoNotOptimize(enumerate_combination(g, name));
}
BENCHMARK(BM_EdgeSearch)->Unit(benchmark::kMillisecond);

void BM_CornerSearch(benchmark::State& state) {
  const DodecGraph& g = dodecahedron();
  const auto cases = solve_angle_numerics();
  for (auto _ : state)
    for (const auto& c : cases) benchmark::DoNotOptimize(enumerate_angle_combination(g, c.combination));
}
BENCHMARK(BM_CornerSearch)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  CombineOptions o;
  o.apex_late = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(o));
}
BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConstructT5(benchmark::State& state) {
  double a = 0.68;
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_t5(a, 0.8));
    a = a < 0.84 ? a + 1e-4 : 0.68;
  }
}
BENCHMARK(BM_ConstructT5);

void BM_SolveIsolated(benchmark::State& state) {
  const CombineResult r = classify();
  NewtonConfig cfg;
  cfg.grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_isolated(r.classes[1], cfg));
}
BENCHMARK(BM_SolveIsolated)->Arg(40)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
