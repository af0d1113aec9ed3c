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

#include <cmath>

#include "nstaylor/field_ops.hpp"
#include "nstaylor/spectrum.hpp"

namespace {

nst::GridField wave(const nst::GridSpec& spec, int k) {
  return nst::GridField::sample(spec, [k](double x, double y, double z) {
    return std::sin(k * x) * std::cos(y) + std::cos(k * z);
  });
}

void BM_GridMultiply(benchmark::State& state) {
  const auto dealias = state.range(1) ? nst::Dealias::exact_padding : nst::Dealias::two_thirds;
  const auto spec = nst::GridSpec::cube(static_cast<int>(state.range(0)), dealias);
  const auto f = wave(spec, 2);
  const auto g = wave(spec, 3);
  for (auto _ : state) benchmark::DoNotOptimize(nst::field::multiply(f, g));
}
BENCHMARK(BM_GridMultiply)
    ->ArgsProduct({{32, 64}, {0, 1}})
    ->ArgNames({"n", "padded"})
    ->Unit(benchmark::kMillisecond);

void BM_ProductAccumulator(benchmark::State& state) {
  const auto spec = nst::GridSpec::cube(static_cast<int>(state.range(0)), nst::Dealias::exact_padding);
  const auto a = nst::ProductAccumulator::lift(nst::forward(wave(spec, 2)));
  const auto b = nst::ProductAccumulator::lift(nst::forward(wave(spec, 3)));
  for (auto _ : state) {
    nst::ProductAccumulator acc(spec);
    for (int i = 0; i < 9; ++i) acc.add(a, b, 1.0);
    benchmark::DoNotOptimize(acc.finish());
  }
}
BENCHMARK(BM_ProductAccumulator)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Poisson(benchmark::State& state) {
  const auto spec = nst::GridSpec::cube(static_cast<int>(state.range(0)));
  const auto g = nst::forward(wave(spec, 2));
  for (auto _ : state) benchmark::DoNotOptimize(nst::poisson_solve(g));
}
BENCHMARK(BM_Poisson)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
