/*
 * Copyright 2026 The crystile Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "crystile/crystile.hpp"

namespace {

using namespace crystile;

const char* const kGroups[] = {"p1", "p2", "pgg", "p4m", "p3m1", "p6m"};

void BM_VoronoiTiling(benchmark::State& state) {
  CrystalGroup g = preset(kGroups[state.range(0)]);
  Vec x = generic_point(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(voronoi_tiling(g, x));
  state.SetLabel(g.name());
}
BENCHMARK(BM_VoronoiTiling)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_AutomorphismGroup(benchmark::State& state) {
  CrystalGroup g = preset(kGroups[state.range(0)]);
  PeriodicTiling t = construct_tiling(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(t));
  state.SetLabel(g.name());
}
BENCHMARK(BM_AutomorphismGroup)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_ConstructTiling(benchmark::State& state) {
  CrystalGroup g = preset(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(construct_tiling(g, 0));
  state.SetLabel(g.name());
}
BENCHMARK(BM_ConstructTiling)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_ValidateTiling(benchmark::State& state) {
  CrystalGroup g = preset(kGroups[state.range(0)]);
  PeriodicTiling t = construct_tiling(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(validate_tiling(t));
  state.SetLabel(g.name());
}
BENCHMARK(BM_ValidateTiling)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_DistanceBound(benchmark::State& state) {
  PeriodicTiling t(Frame::standard(2), Mat::identity(2), {ConvexPolytope::box(zero_vec(2), Vec{1, 1})});
  PeriodicTiling shifted = transform_tiling(t, Isometry::translation(Vec{ratio(1, 10), 0}));
  Vec origin{ratio(1, 3), ratio(1, 7)};
  for (auto _ : state) benchmark::DoNotOptimize(distance_upper_bound(origin, t, shifted));
}
BENCHMARK(BM_DistanceBound)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
