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

#include <random>

#include "nstaylor/oracle.hpp"
#include "nstaylor/trigpoly.hpp"

namespace {

nst::TrigPoly dense(int kmax) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  nst::TrigPoly p;
  for (int x = 0; x <= kmax; ++x)
    for (int y = -kmax; y <= kmax; ++y)
      for (int z = -kmax; z <= kmax; ++z)
        p = nst::tp_add(p, nst::TrigPoly::mode_pair({x, y, z}, {amp(rng), amp(rng)}), 0.0);
  return p;
}

void BM_TrigPolyMultiply(benchmark::State& state) {
  const auto a = dense(static_cast<int>(state.range(0)));
  const auto b = dense(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nst::tp_mul(a, b));
  state.counters["terms"] = static_cast<double>(a.size());
}
BENCHMARK(BM_TrigPolyMultiply)->Arg(1)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_TrigPolyPoisson(benchmark::State& state) {
  auto g = dense(static_cast<int>(state.range(0)));
  g = nst::tp_sub(g, nst::TrigPoly::constant(g.coeff({0, 0, 0}).real()), 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(nst::tp_poisson_inverse(g));
}
BENCHMARK(BM_TrigPolyPoisson)->Arg(4)->Arg(8);

void BM_TrigPolyMaxNorm(benchmark::State& state) {
  const auto a = dense(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nst::tp_max_norm(a));
}
BENCHMARK(BM_TrigPolyMaxNorm)->Arg(2)->Arg(6)->Unit(benchmark::kMicrosecond);

}  // namespace
