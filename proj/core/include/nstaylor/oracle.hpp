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

#pragma once

#include <cstdint>
#include <string>

#include "nstaylor/greensfn.hpp"
#include "nstaylor/trigpoly.hpp"

namespace nst {

enum class FlowKind { taylor_green_2d, abc_beltrami };

std::string to_string(FlowKind k);
/// Accepts "taylor_green", "taylor_green_2d", "tg", "abc", "abc_beltrami".
FlowKind flow_kind_from_string(const std::string& s);

/// Closed-form periodic Navier-Stokes solutions on the 2*pi box.
struct ExactFlow {
  FlowKind kind = FlowKind::taylor_green_2d;
  double nu = 0.0;
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;

  static ExactFlow taylor_green(double nu) { return {FlowKind::taylor_green_2d, nu}; }
  static ExactFlow abc(double nu, double a = 1.0, double b = 1.0, double c = 1.0) {
    return {FlowKind::abc_beltrami, nu, a, b, c};
  }

  /// Velocity decays like exp(-decay_rate t); pressure like exp(-2 decay_rate t).
  double decay_rate() const { return kind == FlowKind::taylor_green_2d ? 2.0 * nu : nu; }
};

TrigVec initial_velocity(const ExactFlow& flow);
/// Mean-zero pressure at t = 0.
TrigPoly initial_pressure(const ExactFlow& flow);

TrigVec exact_velocity(const ExactFlow& flow, double t);
TrigPoly exact_pressure(const ExactFlow& flow, double t);

/// Pointwise closed forms, evaluated without the trigpoly machinery.
std::array<double, 3> velocity_at(const ExactFlow& flow, double t, const Point& x);
double pressure_at(const ExactFlow& flow, double t, const Point& x);

struct CoefficientPair {
  TrigVec velocity;
  TrigPoly pressure;
};

/// u_0 (-r)^n / n! and p_0 (-2r)^n / n! with r the decay rate.
CoefficientPair expected_coefficient(const ExactFlow& flow, int n);

struct GaussianPair {
  FreeSpaceGrid phi;
  FreeSpaceGrid p_exact;
};

/// p = exp(-r^2), phi = -lap p = (6 - 4 r^2) exp(-r^2) on [-R, R]^3.
GaussianPair gaussian_poisson_pair(double half_width, int n_per_axis);

/// Divergence-free trigonometric velocity with `waves` random wavevectors,
/// components in [-kmax, kmax], rescaled so the largest component max norm
/// equals `amplitude`.
TrigVec random_divergence_free(std::uint64_t seed, int waves, int kmax, double amplitude = 1.0);

}  // namespace nst
