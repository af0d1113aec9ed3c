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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "nstaylor/errors.hpp"
#include "nstaylor/spectrum.hpp"
#include "nstaylor/trigpoly.hpp"
#include "test_support.hpp"

namespace nst {
namespace {

using std::cos;
using std::sin;
using testing::kPi;

double sup_gap(const TrigPoly& p, double (*f)(const Point&)) {
  return testing::max_gap(testing::probe_points(), [&](const Point& x) { return tp_eval(p, x); }, f);
}

TEST(TrigPolyArithmetic, AddCancelsToEmpty) {
  const TrigPoly c = TrigPoly::cosine({1, 0, 0});
  EXPECT_TRUE(tp_add(c, tp_scale(c, -1.0)).empty());
}

TEST(TrigPolyArithmetic, ScaleAndDouble) {
  const TrigPoly s = TrigPoly::sine({0, 1, 0});
  EXPECT_EQ(tp_scale(s, 2.0), TrigPoly::sine({0, 1, 0}, 2.0));
  const TrigPoly c = TrigPoly::cosine({1, 0, 0});
  EXPECT_EQ(tp_add(c, c), TrigPoly::cosine({1, 0, 0}, 2.0));
}

TEST(TrigPolyArithmetic, CosineTimesCosine) {
  const TrigPoly c = TrigPoly::cosine({1, 0, 0});
  const TrigPoly want = tp_add(TrigPoly::constant(0.5), TrigPoly::cosine({2, 0, 0}, 0.5));
  EXPECT_EQ(tp_mul(c, c), want);
}

TEST(TrigPolyArithmetic, CosineTimesSine) {
  const TrigPoly got = tp_mul(TrigPoly::cosine({1, 0, 0}), TrigPoly::sine({1, 0, 0}));
  EXPECT_EQ(got, TrigPoly::sine({2, 0, 0}, 0.5));
}

TEST(TrigPolyArithmetic, SquareOfCosSinProduct) {
  const TrigPoly f = tp_mul(TrigPoly::cosine({1, 0, 0}), TrigPoly::sine({0, 1, 0}));
  const TrigPoly sq = tp_mul(f, f);
  std::set<Wavevector> want;
  for (int a : {-2, 0, 2})
    for (int b : {-2, 0, 2}) want.insert({a, b, 0});
  const auto support = sq.support();
  EXPECT_EQ(std::set<Wavevector>(support.begin(), support.end()), want);
  EXPECT_NEAR(tp_eval(sq, {0.0, kPi / 2, 0.0}), 1.0, 1e-15);
  EXPECT_LE(sup_gap(sq, [](const Point& x) {
              const double v = cos(x[0]) * sin(x[1]);
              return v * v;
            }),
            1e-15);
}

TEST(TrigPolyCalculus, DerivativeOfSine) {
  EXPECT_EQ(tp_derivative(TrigPoly::sine({1, 0, 0}), Axis::x), TrigPoly::cosine({1, 0, 0}));
}

TEST(TrigPolyCalculus, LaplacianOfCosine) {
  EXPECT_EQ(tp_laplacian(TrigPoly::cosine({0, 2, 0})), TrigPoly::cosine({0, 2, 0}, -4.0));
}

TEST(TrigPolyCalculus, AbcComponentIsLaplacianEigenfunction) {
  const TrigPoly u = tp_add(TrigPoly::sine({0, 0, 1}), TrigPoly::cosine({0, 1, 0}));
  EXPECT_EQ(tp_laplacian(u), tp_scale(u, -1.0));
}

TEST(TrigPolyPoisson, SingleMode) {
  EXPECT_EQ(tp_poisson_inverse(TrigPoly::cosine({2, 0, 0})), TrigPoly::cosine({2, 0, 0}, -0.25));
}

TEST(TrigPolyPoisson, ZeroSource) { EXPECT_TRUE(tp_poisson_inverse(TrigPoly{}).empty()); }

TEST(TrigPolyPoisson, TaylorGreenPressure) {
  const TrigPoly g = tp_add(TrigPoly::cosine({2, 0, 0}), TrigPoly::cosine({0, 2, 0}));
  const TrigPoly p = tp_poisson_inverse(g);
  EXPECT_LE(sup_gap(p, [](const Point& x) { return -0.25 * (cos(2 * x[0]) + cos(2 * x[1])); }),
            1e-15);
}

TEST(TrigPolyPoisson, RejectsNonzeroMean) {
  EXPECT_THROW(tp_poisson_inverse(tp_add(TrigPoly::constant(1.0), TrigPoly::cosine({1, 0, 0}))),
               IncompatibleSourceError);
}

TEST(TrigPolyEval, Examples) {
  EXPECT_EQ(tp_eval(TrigPoly::cosine({1, 0, 0}), {0, 0, 0}), 1.0);
  EXPECT_NEAR(tp_eval(TrigPoly::sine({0, 2, 0}), {0, kPi / 4, 0}), 1.0, 1e-15);
}

TEST(TrigPolyGrid, RoundTripRecoversModes) {
  std::mt19937_64 rng(7);
  const GridSpec spec = GridSpec::cube(16);
  for (int trial = 0; trial < 5; ++trial) {
    const TrigPoly p = testing::random_poly(rng, 8, 5);
    const TrigPoly back = tp_from_spectrum(forward(tp_to_grid(p, spec)), 1e-13);
    const TrigPoly diff = tp_sub(back, p, 0.0);
    EXPECT_LE(diff.max_magnitude(), 1e-12);
  }
}

TEST(TrigPolyGrid, RejectsSupportBeyondNyquist) {
  EXPECT_THROW(tp_to_grid(TrigPoly::cosine({8, 0, 0}), GridSpec::cube(16)), ResolutionError);
  EXPECT_NO_THROW(tp_to_grid(TrigPoly::cosine({7, 0, 0}), GridSpec::cube(16)));
}

TEST(TrigPolyConstruction, RejectsNonHermitianTerms) {
  std::vector<TrigPoly::Term> terms{{{1, 0, 0}, {1.0, 0.0}}, {{-1, 0, 0}, {2.0, 0.0}}};
  EXPECT_THROW(TrigPoly::from_terms(terms), std::invalid_argument);
}

TEST(TrigPolyConstruction, RejectsNonFiniteCoefficients) {
  std::vector<TrigPoly::Term> terms{{{0, 0, 0}, {std::nan(""), 0.0}}};
  EXPECT_THROW(TrigPoly::from_terms(terms), NonFiniteError);
}

TEST(TrigPolyDump, GoldenText) {
  const TrigPoly p = tp_add(TrigPoly::cosine({1, 0, 0}), TrigPoly::sine({0, 0, 2}, 3.0));
  std::ostringstream out;
  tp_dump(out, p);
  EXPECT_EQ(out.str(),
            "-1 0 0 0.5 0\n"
            "0 0 -2 0 1.5\n"
            "0 0 2 0 -1.5\n"
            "1 0 0 0.5 0\n");
  std::istringstream in(out.str());
  EXPECT_EQ(tp_parse(in), p);
}

TEST(TrigPolyDump, RoundTripIsExact) {
  std::mt19937_64 rng(11);
  const TrigPoly p = testing::random_poly(rng, 20, 4);
  std::stringstream s;
  tp_dump(s, p);
  EXPECT_EQ(tp_parse(s), p);
}

class TrigPolyProperties : public ::testing::TestWithParam<int> {
 protected:
  std::mt19937_64 rng{static_cast<std::uint64_t>(GetParam())};
  TrigPoly a = testing::random_poly(rng, 7, 3);
  TrigPoly b = testing::random_poly(rng, 7, 3);
};

TEST_P(TrigPolyProperties, EveryOperationPreservesHermitianSymmetry) {
  EXPECT_TRUE(tp_add(a, b).is_hermitian());
  EXPECT_TRUE(tp_scale(a, -1.7).is_hermitian());
  EXPECT_TRUE(tp_mul(a, b).is_hermitian());
  EXPECT_TRUE(tp_mul(a, a).is_hermitian());
  for (Axis ax : kAxes) EXPECT_TRUE(tp_derivative(a, ax).is_hermitian());
  EXPECT_TRUE(tp_laplacian(b).is_hermitian());
  EXPECT_TRUE(tp_poisson_inverse(tp_laplacian(a)).is_hermitian());
}

TEST_P(TrigPolyProperties, ProductSupportIsMinkowskiSum) {
  std::set<Wavevector> want;
  for (const auto& ka : a.support())
    for (const auto& kb : b.support()) want.insert(ka + kb);
  const auto got = tp_mul(a, b, 0.0).support();
  std::set<Wavevector> got_set(got.begin(), got.end());
  // Exact cancellation can only remove wavevectors, never add them.
  for (const auto& k : got_set) EXPECT_TRUE(want.count(k)) << k.x << ' ' << k.y << ' ' << k.z;
  EXPECT_GE(static_cast<double>(got_set.size()), 0.9 * static_cast<double>(want.size()));
}

TEST_P(TrigPolyProperties, LaplacianInvertsPoisson) {
  const TrigPoly g = tp_laplacian(a);
  const TrigPoly back = tp_laplacian(tp_poisson_inverse(g));
  ASSERT_EQ(back.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(back.terms()[i].k, g.terms()[i].k);
    EXPECT_LE(std::abs(back.terms()[i].c - g.terms()[i].c), 1e-15 * std::abs(g.terms()[i].c));
  }
}

TEST_P(TrigPolyProperties, LeibnizRule) {
  for (Axis ax : kAxes) {
    const TrigPoly lhs = tp_derivative(tp_mul(a, b), ax);
    const TrigPoly rhs = tp_add(tp_mul(tp_derivative(a, ax), b), tp_mul(a, tp_derivative(b, ax)));
    EXPECT_LE(tp_sub(lhs, rhs, 0.0).max_magnitude(), 1e-12);
  }
}

TEST_P(TrigPolyProperties, EvaluationMatchesGridSamples) {
  const GridSpec spec = GridSpec::cube(8);
  const GridField g = tp_to_grid(a, spec);
  for (int k = 0; k < 8; k += 3)
    for (int j = 0; j < 8; j += 2)
      for (int i = 0; i < 8; ++i) EXPECT_NEAR(g(i, j, k), tp_eval(a, g.coordinate(i, j, k)), 1e-13);
}

TEST_P(TrigPolyProperties, MeanSquareMatchesL2) {
  const GridSpec spec = GridSpec::cube(16);
  const GridField g = tp_to_grid(a, spec);
  double sq = 0.0;
  for (double v : g.values()) sq += v * v;
  EXPECT_NEAR(sq / static_cast<double>(g.size()), a.mean_square(), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, TrigPolyProperties, ::testing::Values(1, 2, 3, 4, 5));

TEST(TrigPolyPrune, RelativeThresholdDropsTinyProducts) {
  const TrigPoly big = TrigPoly::cosine({1, 0, 0}, 1.0);
  const TrigPoly mixed = tp_add(TrigPoly::cosine({2, 0, 0}, 1.0), TrigPoly::cosine({0, 3, 0}, 1e-16));
  const TrigPoly prod = tp_mul(big, mixed);
  for (const auto& t : prod.terms()) EXPECT_GE(std::abs(t.c), 1e-14 * 0.5);
  EXPECT_EQ(prod.size(), 4u);
}

TEST(TrigPolyNorms, MaxNormOfKnownPolynomials) {
  EXPECT_NEAR(tp_max_norm(TrigPoly::cosine({1, 2, 0}, 3.0)), 3.0, 1e-12);
  const TrigPoly tg = tp_mul(TrigPoly::cosine({1, 0, 0}), TrigPoly::sine({0, 1, 0}));
  EXPECT_NEAR(tp_max_norm(tg), 1.0, 1e-12);
  EXPECT_EQ(tp_max_norm(TrigPoly{}), 0.0);
}

}  // namespace
}  // namespace nst
