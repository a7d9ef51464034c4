// Copyright 2026 The sphull Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include "benchmark/benchmark.h"
#include "sphull/hull.hpp"
#include "sphull/metrics.hpp"
#include "sphull/random.hpp"
#include "sphull/sampling.hpp"

namespace sphull {
namespace {

std::vector<Vec3> SpherePoints(std::size_t n, std::uint64_t seed) {
  RandomStream rng(seed, 0);
  std::vector<Vec3> pts;
  for (const UnitVec3& u : sample_uniform_sphere(n, rng)) pts.push_back(u.vec());
  return pts;
}

void BM_ConvexHull(benchmark::State& state) {
  const auto pts = SpherePoints(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convex_hull(pts));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvexHull)->RangeMultiplier(4)->Range(4, 16384)->Complexity();

void BM_Measure(benchmark::State& state) {
  const ConvexPolytope3 p =
      convex_hull(SpherePoints(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure(p));
  }
}
BENCHMARK(BM_Measure)->Arg(10)->Arg(100)->Arg(1000);

void BM_SampleAndMeasure(benchmark::State& state) {
  const ProcessSpec spec = ProcessSpec::uniform(state.range(0));
  std::uint64_t trial = 0;
  for (auto _ : state) {
    RandomStream rng(3, trial++);
    benchmark::DoNotOptimize(measure_point_set(sample_process(spec, rng)));
  }
}
BENCHMARK(BM_SampleAndMeasure)->Arg(4)->Arg(10)->Arg(100)->Arg(1000);

void BM_PoissonSample(benchmark::State& state) {
  const double rho = static_cast<double>(state.range(0));
  std::uint64_t trial = 0;
  for (auto _ : state) {
    RandomStream rng(4, trial++);
    benchmark::DoNotOptimize(sample_poisson_sphere(rho, rng));
  }
}
BENCHMARK(BM_PoissonSample)->Arg(1)->Arg(4)->Arg(64);

}  // namespace
}  // namespace sphull

BENCHMARK_MAIN();
