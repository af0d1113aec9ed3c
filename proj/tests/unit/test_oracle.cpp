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

#include "nstaylor/oracle.hpp"
#include "test_support.hpp"

namespace nst {
namespace {

TrigPoly divergence(const TrigVec& u) {
  TrigPoly d;
  for (Axis a : kAxes) d = tp_add(d, tp_derivative(u[a], a), 0.0);
  return d;
}

TrigVec curl(const TrigVec& u) {
  return make_vec3(tp_sub(tp_derivative(u.z(), Axis::y), tp_derivative(u.y(), Axis::z), 0.0),
                   tp_sub(tp_derivative(u.x(), Axis::z), tp_derivative(u.z(), Axis::x), 0.0),
                   tp_sub(tp_derivative(u.y(), Axis::x), tp_derivative(u.x(), Axis::y), 0.0));
}

/// Navier-Stokes momentum residual of the pointwise closed forms, by
/// fourth-order central differences in space and time.
double fd_residual(const ExactFlow& f, double t, const Point& x) {
  const double h = 1e-3;
  auto u = [&](double tt, Point p) { return velocity_at(f, tt, p); };
  auto d1 = [&](auto&& g, int axis) {
    auto at = [&](double s) {
      Point p = x;
      p[static_cast<std::size_t>(axis)] += s;
      return g(p);
    };
    return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
  };
  auto d2 = [&](auto&& g, int axis) {
    auto at = [&](double s) {
      Point p = x;
      p[static_cast<std::size_t>(axis)] += s;
      return g(p);
    };
    return (-at(2 * h) + 16 * at(h) - 30 * at(0) + 16 * at(-h) - at(-2 * h)) / (12 * h * h);
  };
  const auto u0 = u(t, x);
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    auto comp = [&](const Point& p) { return u(t, p)[static_cast<std::size_t>(k)]; };
    const double dt = (-u(t + 2 * h, x)[k] + 8 * u(t + h, x)[k] - 8 * u(t - h, x)[k] +
                       u(t - 2 * h, x)[k]) / (12 * h);
    double adv = 0.0;
    double lap = 0.0;
    for (int a = 0; a < 3; ++a) {
      adv += u0[static_cast<std::size_t>(a)] * d1(comp, a);
      lap += d2(comp, a);
    }
    const double gp = d1([&](const Point& p) { return pressure_at(f, t, p); }, k);
    worst = std::max(worst, std::abs(dt + adv + gp - f.nu * lap));
  }
  return worst;
}

TEST(ExactFlows, SatisfyNavierStokesPointwise) {
  for (const ExactFlow& f : {ExactFlow::taylor_green(0.1), ExactFlow::taylor_green(0.0),
                             ExactFlow::abc(1.0), ExactFlow::abc(0.3, 1.0, 0.7, 0.4)})
    for (const Point& x : testing::probe_points(3))
      EXPECT_LE(fd_residual(f, 0.4, x), 1e-8) << to_string(f.kind) << " nu=" << f.nu;
}

TEST(ExactFlows, TrigpolyFormsMatchPointwiseForms) {
  for (const ExactFlow& f : {ExactFlow::taylor_green(0.2), ExactFlow::abc(0.5, 0.9, 0.6, 0.3)}) {
    for (double t : {0.0, 0.7}) {
      const TrigVec u = exact_velocity(f, t);
      const TrigPoly p = exact_pressure(f, t);
      for (const Point& x : testing::probe_points(4)) {
        const auto want = velocity_at(f, t, x);
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(tp_eval(u[k], x), want[k], 1e-14);
        EXPECT_NEAR(tp_eval(p, x), pressure_at(f, t, x), 1e-14);
      }
    }
  }
}

TEST(ExactFlows, PressureHasZeroMeanAndVelocityIsSolenoidal) {
  for (const ExactFlow& f : {ExactFlow::taylor_green(0.1), ExactFlow::abc(0.1, 1.0, 2.0, 0.5)}) {
    EXPECT_EQ(initial_pressure(f).coeff({0, 0, 0}), Complex{});
    EXPECT_TRUE(divergence(initial_velocity(f)).empty());
  }
}

TEST(ExactFlows, AbcIsBeltrami) {
  const TrigVec u = initial_velocity(ExactFlow::abc(0.0, 1.0, 0.8, 0.3));
  const TrigVec w = curl(u);
  for (int k = 0; k < 3; ++k) EXPECT_LE(tp_max_norm(tp_sub(w[k], u[k], 0.0)), 1e-15);
}

TEST(ExpectedCoefficient, FirstOrderMatchesTimeDerivative) {
  const double h = 1e-4;
  for (const ExactFlow& f : {ExactFlow::taylor_green(0.3), ExactFlow::abc(0.7)}) {
    const auto c1 = expected_coefficient(f, 1);
    for (const Point& x : testing::probe_points(3)) {
      const auto up = velocity_at(f, h, x);
      const auto um = velocity_at(f, -h, x);
      for (int k = 0; k < 3; ++k) EXPECT_NEAR(tp_eval(c1.velocity[k], x), (up[k] - um[k]) / (2 * h), 1e-8);
      EXPECT_NEAR(tp_eval(c1.pressure, x), (pressure_at(f, h, x) - pressure_at(f, -h, x)) / (2 * h),
                  1e-8);
    }
  }
}

TEST(ExpectedCoefficient, TaylorGreenClosedForm) {
  const auto c = expected_coefficient(ExactFlow::taylor_green(0.1), 3);
  const double s = -0.008 / 6.0;  // (-0.2)^3 / 3!
  for (const Point& x : testing::probe_points(3))
    EXPECT_NEAR(tp_eval(c.velocity[0], x), -s * std::cos(x[0]) * std::sin(x[1]), 1e-16);
  EXPECT_THROW(expected_coefficient(ExactFlow::taylor_green(0.1), -1), std::invalid_argument);
}

TEST(GaussianPair, SourceHasZeroIntegral) {
  const auto g = gaussian_poisson_pair(8.0, 48);
  EXPECT_LE(std::abs(g.phi.integral()), 1e-10);
  EXPECT_NEAR(g.p_exact.integral(), std::pow(std::numbers::pi, 1.5), 1e-10);
}

double fd_laplacian_error(int n) {
  const auto g = gaussian_poisson_pair(4.0, n);
  const double h = g.phi.spacing();
  double err = 0.0;
  for (int k = 1; k < n - 1; ++k)
    for (int j = 1; j < n - 1; ++j)
      for (int i = 1; i < n - 1; ++i) {
        const auto& p = g.p_exact;
        const double lap = (p(i + 1, j, k) + p(i - 1, j, k) + p(i, j + 1, k) + p(i, j - 1, k) +
                            p(i, j, k + 1) + p(i, j, k - 1) - 6 * p(i, j, k)) / (h * h);
        err = std::max(err, std::abs(-lap - g.phi(i, j, k)));
      }
  return err;
}

TEST(GaussianPair, SourceIsMinusLaplacianOfPotential) {
  const double coarse = fd_laplacian_error(32);
  const double fine = fd_laplacian_error(64);
  EXPECT_LE(fine, 0.1);
  EXPECT_NEAR(std::log2(coarse / fine), 2.0, 0.2);
}

TEST(RandomField, SolenoidalNormalizedAndBandLimited) {
  for (std::uint64_t seed : {1u, 7u, 99u}) {
    const TrigVec u = random_divergence_free(seed, 4, 2, 0.5);
    EXPECT_LE(tp_max_norm(divergence(u)), 1e-15);
    double peak = 0.0;
    for (const auto& c : u) {
      peak = std::max(peak, tp_max_norm(c));
      EXPECT_LE(c.max_mode(), 2);
      EXPECT_TRUE(c.is_hermitian());
      EXPECT_EQ(c.coeff({0, 0, 0}), Complex{});
    }
    EXPECT_NEAR(peak, 0.5, 1e-12);
  }
}

TEST(RandomField, DeterministicPerSeed) {
  const TrigVec a = random_divergence_free(42, 3, 3);
  const TrigVec b = random_divergence_free(42, 3, 3);
  const TrigVec c = random_divergence_free(43, 3, 3);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(a[k], b[k]);
  EXPECT_FALSE(a[0] == c[0] && a[1] == c[1] && a[2] == c[2]);
  EXPECT_TRUE(random_divergence_free(1, 0, 2).x().empty());
  EXPECT_THROW(random_divergence_free(1, 2, 0), std::invalid_argument);
}

TEST(FlowKindNames, Aliases) {
  EXPECT_EQ(flow_kind_from_string("tg"), FlowKind::taylor_green_2d);
  EXPECT_EQ(flow_kind_from_string("taylor_green"), FlowKind::taylor_green_2d);
  EXPECT_EQ(flow_kind_from_string("abc"), FlowKind::abc_beltrami);
  EXPECT_EQ(flow_kind_from_string(to_string(FlowKind::abc_beltrami)), FlowKind::abc_beltrami);
  EXPECT_THROW(flow_kind_from_string("kolmogorov"), std::invalid_argument);
}

}  // namespace
}  // namespace nst
