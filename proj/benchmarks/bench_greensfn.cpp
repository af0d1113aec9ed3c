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

#include "nstaylor/greensfn.hpp"
#include "nstaylor/oracle.hpp"

namespace {

void BM_NewtonianFft(benchmark::State& state) {
  const auto g = nst::gaussian_poisson_pair(8.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nst::newtonian_potential(g.phi));
}
BENCHMARK(BM_NewtonianFft)->Arg(32)->Arg(48)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_NewtonianDirect(benchmark::State& state) {
  const auto g = nst::gaussian_poisson_pair(8.0, static_cast<int>(state.range(0)));
  nst::NewtonianOptions opts;
  opts.method = nst::QuadratureMethod::direct;
  for (auto _ : state) benchmark::DoNotOptimize(nst::newtonian_potential(g.phi, opts));
}
BENCHMARK(BM_NewtonianDirect)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_TorusPressure(benchmark::State& state) {
  const auto g = nst::gaussian_poisson_pair(8.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nst::torus_pressure(g.phi));
}
BENCHMARK(BM_TorusPressure)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
