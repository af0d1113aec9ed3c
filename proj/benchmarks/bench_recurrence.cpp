// Copyright 2026 The nstaylor Authors.
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

#include "nstaylor/oracle.hpp"
#include "nstaylor/recurrence.hpp"

namespace {

nst::ProblemSpec random_problem(int order) {
  nst::ProblemSpec ps;
  ps.nu = 0.05;
  ps.order = order;
  ps.initial_velocity = nst::random_divergence_free(7, 3, 2);
  return ps;
}

void BM_RunTrigPoly(benchmark::State& state) {
  const auto ps = random_problem(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nst::run(ps));
}
BENCHMARK(BM_RunTrigPoly)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_RunGrid(benchmark::State& state) {
  auto ps = random_problem(static_cast<int>(state.range(0)));
  ps.grid = nst::GridSpec::cube(32, nst::Dealias::exact_padding);
  for (auto _ : state) benchmark::DoNotOptimize(nst::run(ps));
}
BENCHMARK(BM_RunGrid)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

// Cost of one step at a given order, with lower orders precomputed.
void BM_AdvanceOrder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const nst::TrigPolyBackend b;
  nst::TaylorCoefficients<nst::TrigPoly> base(0.05, nst::random_divergence_free(7, 3, 2));
  for (int k = 1; k < n; ++k) nst::advance_order(b, base, {}, k, 1e-12);
  for (auto _ : state) {
    state.PauseTiming();
    auto c = base;
    state.ResumeTiming();
    nst::advance_order(b, c, {}, n, 1e-12);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_AdvanceOrder)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
