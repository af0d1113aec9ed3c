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
#include <numbers>

#include "nstaylor/oracle.hpp"
#include "nstaylor/series.hpp"
#include "test_support.hpp"

namespace nst {
namespace {

using TpCoeffs = TaylorCoefficients<TrigPoly>;
const TrigPolyBackend kTp;
constexpr double kPi = std::numbers::pi;

TpCoeffs solve(const ExactFlow& flow, int order) {
  ProblemSpec ps;
  ps.nu = flow.nu;
  ps.order = order;
  ps.initial_velocity = initial_velocity(flow);
  return std::get<Solution<TrigPolyBackend>>(run(ps)).coeffs;
}

double velocity_error(const ExactFlow& flow, const PartialSum<TrigPoly>& s) {
  double m = 0.0;
  for (const Point& x : testing::probe_points(5)) {
    const auto want = velocity_at(flow, s.t, x);
    for (int k = 0; k < 3; ++k) m = std::max(m, std::abs(tp_eval(s.velocity[k], x) - want[k]));
  }
  return m;
}

double pressure_error(const ExactFlow& flow, const PartialSum<TrigPoly>& s) {
  return testing::max_gap(
      testing::probe_points(5), [&](const Point& x) { return tp_eval(s.pressure, x); },
      [&](const Point& x) { return pressure_at(flow, s.t, x); });
}

/// a_n = scale * ratio^n * (sin y, 0, 0), built without the recurrence.
TpCoeffs geometric(double scale, double ratio, int order) {
  auto term = [&](int n) {
    return make_vec3(TrigPoly::sine({0, 1, 0}, scale * std::pow(ratio, n)), TrigPoly{}, TrigPoly{});
  };
  TpCoeffs c(0.0, term(0));
  for (int n = 1; n <= order; ++n) c.append(term(n), TrigPoly{});
  return c;
}

TEST(PartialSumEval, ZeroTimeReturnsInitialFieldsExactly) {
  const TpCoeffs c = solve(ExactFlow::abc(0.3, 1.0, 0.7, 0.2), 5);
  for (int m : {0, 1, 5}) {
    const auto s = evaluate_partial_sum(kTp, c, 0.0, m);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(s.velocity[k], c.velocity(0)[k]);
    EXPECT_EQ(s.pressure, c.pressure(0));
  }
}

TEST(PartialSumEval, TaylorGreenAtUnitTime) {
  const ExactFlow flow = ExactFlow::taylor_green(0.1);
  const auto s = evaluate_partial_sum(kTp, solve(flow, 12), 1.0, 12);
  EXPECT_LE(velocity_error(flow, s), 1e-9);
}

TEST(PartialSumEval, AbcPressureRemainderBound) {
  // exp(-1) truncated after t^7: the tail is below max|p0| * 2 / 8!.
  const ExactFlow flow = ExactFlow::abc(1.0);
  const auto s = evaluate_partial_sum(kTp, solve(flow, 8), 0.5, 8);
  const double p0 = tp_max_norm(initial_pressure(flow));
  const double bound = p0 * 2.0 / 40320.0;
  const double err = pressure_error(flow, s);
  EXPECT_LE(err, bound);
  EXPECT_GE(err, 0.1 * bound);  // the bound is the actual truncation, not slack
}

TEST(PartialSumEval, RejectsOrderBeyondSolution) {
  const TpCoeffs c = solve(ExactFlow::taylor_green(0.1), 3);
  EXPECT_THROW(evaluate_partial_sum(kTp, c, 0.5, 4), OrderError);
  EXPECT_THROW(evaluate_partial_sum(kTp, c, -0.5, 2), std::invalid_argument);
}

TEST(PartialSumEval, AddingOneTermIsLinear) {
  const TpCoeffs c = solve(ExactFlow::abc(0.2, 1.0, 0.5, 0.25), 7);
  for (double t : {0.3, 0.9}) {
    for (int m = 0; m < 7; ++m) {
      const auto lo = evaluate_partial_sum(kTp, c, t, m);
      const auto hi = evaluate_partial_sum(kTp, c, t, m + 1);
      for (int k = 0; k < 3; ++k) {
        const TrigPoly step = tp_add(lo.velocity[k], tp_scale(c.velocity(m + 1)[k], std::pow(t, m + 1)), 0.0);
        EXPECT_LE(tp_max_norm(tp_sub(step, hi.velocity[k], 0.0)), 1e-13);
      }
    }
  }
}

TEST(PartialSumEval, ErrorDecreasesMonotonicallyToRoundingFloor) {
  const ExactFlow flow = ExactFlow::taylor_green(0.1);
  const TpCoeffs c = solve(flow, 12);
  double prev = INFINITY;
  for (int m = 0; m <= 12; ++m) {
    const double err = velocity_error(flow, evaluate_partial_sum(kTp, c, 1.0, m));
    if (prev > 1e-15) {
      EXPECT_LT(err, prev) << "M = " << m;
    } else {
      EXPECT_LE(err, 1e-15) << "M = " << m;
    }
    prev = err;
  }
}

TEST(Radius, GeometricSeries) {
  const auto est = estimate_radius(kTp, geometric(3.0, 0.5, 10));
  ASSERT_TRUE(est.radius_hint.has_value());
  EXPECT_NEAR(*est.radius_hint, 2.0, 1e-9);
  ASSERT_TRUE(est.root_hint.has_value());
  EXPECT_NEAR(*est.root_hint, 2.0 / std::pow(3.0, 0.1), 1e-9);
  EXPECT_EQ(est.ratios.size() + 1, est.norms.size());
  EXPECT_NE(est.summary().find("empirical hint"), std::string::npos);
  EXPECT_NE(est.summary().find("not a proof"), std::string::npos);
}

TEST(Radius, TaylorGreenRatiosVanish) {
  const auto est = estimate_radius(kTp, solve(ExactFlow::taylor_green(0.1), 12));
  ASSERT_EQ(est.ratios.size(), 12u);
  for (std::size_t n = 0; n < est.ratios.size(); ++n) {
    ASSERT_TRUE(est.ratios[n].has_value());
    EXPECT_NEAR(*est.ratios[n], 0.2 / static_cast<double>(n + 1), 1e-12);
  }
  EXPECT_TRUE(est.ratios_decreasing);
  EXPECT_TRUE(est.unbounded());
}

TEST(Radius, DegenerateSeries) {
  const auto est = estimate_radius(kTp, geometric(1.0, 0.0, 6));
  EXPECT_TRUE(est.degenerate);
  EXPECT_TRUE(est.unbounded());
  const auto steady = estimate_radius(kTp, solve(ExactFlow::taylor_green(0.0), 5));
  EXPECT_TRUE(steady.degenerate);
}

TEST(Radius, InsufficientData) {
  const std::vector<double> three{1.0, 0.5, 0.25};
  EXPECT_THROW(estimate_radius(three), InsufficientDataError);
  const std::vector<double> sparse{1.0, 0.5, 0.0, 0.0, 0.1, 0.0};
  EXPECT_THROW(estimate_radius(sparse), InsufficientDataError);
}

TEST(Radius, RejectsNegativeNorms) {
  const std::vector<double> bad{1.0, -0.5, 0.25, 0.1};
  EXPECT_THROW(estimate_radius(bad), std::invalid_argument);
}

TEST(Radius, EnergyNormTrajectory) {
  const TpCoeffs c = geometric(1.0, 0.25, 8);
  const auto norms = velocity_norms(kTp, c, NormKind::energy);
  // |sin y|^2 integrates to (2 pi)^3 / 2.
  EXPECT_NEAR(norms[0], std::sqrt(4.0 * kPi * kPi * kPi), 1e-12);
  const auto est = estimate_radius(std::span<const double>(norms), NormKind::energy);
  EXPECT_NEAR(*est.radius_hint, 4.0, 1e-9);
}

TEST(Energy, Examples) {
  EXPECT_EQ(energy(kTp, TrigVec{}), 0.0);
  EXPECT_NEAR(energy(kTp, initial_velocity(ExactFlow::taylor_green(0.1))), 4.0 * kPi * kPi * kPi,
              1e-12);
  EXPECT_NEAR(energy(kTp, initial_velocity(ExactFlow::abc(0.1))), 3.0 * std::pow(2.0 * kPi, 3),
              1e-11);
}

TEST(Energy, GridMatchesTrigpoly) {
  const TrigVec u = random_divergence_free(11, 3, 2);
  const GridBackend g(GridSpec::cube(16));
  Vec3<Spectrum> v;
  for (int k = 0; k < 3; ++k) v[k] = g.from_trigpoly(u[k]);
  EXPECT_NEAR(energy(g, v), energy(kTp, u), 1e-12 * energy(kTp, u));
}

TEST(Residual, VanishesAtInitialTime) {
  const TpCoeffs c = solve(ExactFlow::abc(0.4, 1.0, 0.6, 0.3), 4);
  const auto pts = default_sample_points();
  for (int m = 1; m <= 4; ++m) {
    const auto r = residual_check(kTp, c, 0.0, m, pts);
    EXPECT_LE(r.momentum, 1e-12);
    EXPECT_LE(r.continuity, 1e-12);
  }
}

TEST(Residual, TaylorGreenScalesAsPowerOfTime) {
  const TpCoeffs c = solve(ExactFlow::taylor_green(0.1), 4);
  const auto pts = default_sample_points();
  const double ratio = residual_check(kTp, c, 0.2, 4, pts).momentum /
                       residual_check(kTp, c, 0.1, 4, pts).momentum;
  EXPECT_NEAR(ratio, 16.0, 0.2 * 16.0);
}

TEST(Residual, ContinuityStaysAtRoundoff) {
  ProblemSpec ps;
  ps.nu = 0.05;
  ps.order = 5;
  ps.initial_velocity = random_divergence_free(5, 3, 2);
  const auto c = std::get<Solution<TrigPolyBackend>>(run(ps)).coeffs;
  const auto pts = default_sample_points(4);
  for (double t : {0.1, 0.5, 1.0}) {
    double bound = 0.0;
    for (int i = 0; i <= 5; ++i) bound += 1e-12 * std::pow(t, i);
    for (int m = 1; m <= 5; ++m) EXPECT_LE(residual_check(kTp, c, t, m, pts).continuity, bound);
  }
}

TEST(Residual, RejectsBadOrder) {
  const TpCoeffs c = solve(ExactFlow::taylor_green(0.1), 3);
  const auto pts = default_sample_points(2);
  EXPECT_THROW(residual_check(kTp, c, 0.1, 0, pts), OrderError);
  EXPECT_THROW(residual_check(kTp, c, 0.1, 4, pts), OrderError);
}

TEST(Residual, ExactFlowTruncatedFarOutIsSmall) {
  const ExactFlow flow = ExactFlow::abc(0.5);
  const TpCoeffs c = solve(flow, 14);
  EXPECT_LE(residual_check(kTp, c, 0.3, 14, default_sample_points()).momentum, 1e-10);
}

TEST(NormKindNames, RoundTrip) {
  EXPECT_EQ(norm_kind_from_string(to_string(NormKind::energy)), NormKind::energy);
  EXPECT_EQ(norm_kind_from_string("max"), NormKind::max);
  EXPECT_THROW(norm_kind_from_string("l7"), std::invalid_argument);
}

}  // namespace
}  // namespace nst
