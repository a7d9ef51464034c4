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

#include "benchmark/benchmark.h"
#include "sphull/expectations.hpp"
#include "sphull/special.hpp"

namespace sphull {
namespace {

void BM_BesselI(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_i(2.5, x));
  }
}
BENCHMARK(BM_BesselI)->Arg(1)->Arg(30)->Arg(300);

void BM_BesselIScaled(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_i_scaled(3.5, x));
  }
}
BENCHMARK(BM_BesselIScaled)->Arg(1)->Arg(30)->Arg(3000);

void BM_EllipticF(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(incomplete_elliptic_f(1.1, 0.8));
  }
}
BENCHMARK(BM_EllipticF);

void BM_EllipticE(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(incomplete_elliptic_e(1.1, 0.8));
  }
}
BENCHMARK(BM_EllipticE);

void BM_ExpectedPoissonVolume(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_iv_poisson(IntrinsicIndex::kVolume, 4.0));
  }
}
BENCHMARK(BM_ExpectedPoissonVolume);

void BM_ExpectedEdgeLength(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_edge_length_uniform(n));
  }
}
BENCHMARK(BM_ExpectedEdgeLength)->Arg(10)->Arg(1000000);

void BM_MinDistance(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_min_distance(n));
  }
}
BENCHMARK(BM_MinDistance)->Arg(100)->Arg(4096)->Arg(1000000);

}  // namespace
}  // namespace sphull

BENCHMARK_MAIN();
