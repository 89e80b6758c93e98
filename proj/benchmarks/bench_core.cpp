// Copyright 2026 The dicke-squeezing Authors
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

#include "dicke/analytic.hpp"
#include "dicke/dynamics.hpp"
#include "dicke/measures.hpp"
#include "dicke/scenario.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

using namespace dicke;

const SystemParams kCombined{1.0, 1.0, 0.1, -std::sqrt(0.11), CorrelationBound::kQuantum};

void BM_HermitianEigen(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(std::cos(r + 2.0 * c), std::sin(r * c + 1.0));
  m = 0.5 * (m + m.adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigen)->Arg(3)->Arg(4)->Arg(9)->Arg(16);

void BM_CubicRoots(benchmark::State& state) {
  const CubicCoefficients c{-23.0 / 22, 51.0 / 484, -21.0 / 10648};
  for (auto _ : state) benchmark::DoNotOptimize(cubic_roots(c));
}
BENCHMARK(BM_CubicRoots);

void BM_BuildLiouvillian(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_liouvillian(kCombined));
}
BENCHMARK(BM_BuildLiouvillian);

void BM_NumericSteadyState(benchmark::State& state) {
  const auto L = build_liouvillian(kCombined);
  for (auto _ : state) benchmark::DoNotOptimize(steady_state(L));
}
BENCHMARK(BM_NumericSteadyState);

void BM_AnalyticSteadyState(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(steady_coherent(1.0));
}
BENCHMARK(BM_AnalyticSteadyState);

void BM_Negativity(benchmark::State& state) {
  const auto rho = steady_state(build_liouvillian(kCombined));
  for (auto _ : state) benchmark::DoNotOptimize(negativity(rho));
}
BENCHMARK(BM_Negativity);

void BM_Propagate(benchmark::State& state) {
  const auto rho0 = DickeState::basis(kGround);
  for (auto _ : state) benchmark::DoNotOptimize(propagate(rho0, kCombined, 1.0));
}
BENCHMARK(BM_Propagate)->Unit(benchmark::kMillisecond);

void BM_FigureSweep(benchmark::State& state) {
  const auto f = figure_preset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario_sweep(f.scenario, f.grid, f.solver));
}
BENCHMARK(BM_FigureSweep)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
