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

#include "nstaylor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace nst {

std::string to_string(FlowKind k) {
  return k == FlowKind::taylor_green_2d ? "taylor_green_2d" : "abc_beltrami";
}

FlowKind flow_kind_from_string(const std::string& s) {
  if (s == "taylor_green" || s == "taylor_green_2d" || s == "tg") return FlowKind::taylor_green_2d;
  if (s == "abc" || s == "abc_beltrami") return FlowKind::abc_beltrami;
  throw std::invalid_argument("unknown flow '" + s + "'");
}

TrigVec initial_velocity(const ExactFlow& flow) {
  if (flow.kind == FlowKind::taylor_green_2d) {
    // -cos x sin y = -(sin(x+y) - sin(x-y))/2, sin x cos y = (sin(x+y) + sin(x-y))/2
    const TrigPoly sp = TrigPoly::sine({1, 1, 0}, 0.5);
    const TrigPoly sm = TrigPoly::sine({1, -1, 0}, 0.5);
    return make_vec3(tp_sub(sm, sp), tp_add(sp, sm), TrigPoly{});
  }
  const auto add = [](const TrigPoly& p, const TrigPoly& q) { return tp_add(p, q, 0.0); };
  return make_vec3(add(TrigPoly::sine({0, 0, 1}, flow.a), TrigPoly::cosine({0, 1, 0}, flow.c)),
                   add(TrigPoly::sine({1, 0, 0}, flow.b), TrigPoly::cosine({0, 0, 1}, flow.a)),
                   add(TrigPoly::sine({0, 1, 0}, flow.c), TrigPoly::cosine({1, 0, 0}, flow.b)));
}

TrigPoly initial_pressure(const ExactFlow& flow) {
  if (flow.kind == FlowKind::taylor_green_2d)
    return tp_add(TrigPoly::cosine({2, 0, 0}, -0.25), TrigPoly::cosine({0, 2, 0}, -0.25), 0.0);
  const TrigVec u = initial_velocity(flow);
  TrigPoly sq;
  for (const auto& c : u) sq = tp_add(sq, tp_mul(c, c, 0.0), 0.0);
  const double mean = flow.a * flow.a + flow.b * flow.b + flow.c * flow.c;
  return tp_scale(tp_sub(sq, TrigPoly::constant(mean), 0.0), -0.5);
}

TrigVec exact_velocity(const ExactFlow& flow, double t) {
  TrigVec u = initial_velocity(flow);
  const double s = std::exp(-flow.decay_rate() * t);
  for (auto& c : u) c = tp_scale(c, s);
  return u;
}

TrigPoly exact_pressure(const ExactFlow& flow, double t) {
  return tp_scale(initial_pressure(flow), std::exp(-2.0 * flow.decay_rate() * t));
}

std::array<double, 3> velocity_at(const ExactFlow& flow, double t, const Point& p) {
  const double s = std::exp(-flow.decay_rate() * t);
  const auto [x, y, z] = p;
  if (flow.kind == FlowKind::taylor_green_2d)
    return {-std::cos(x) * std::sin(y) * s, std::sin(x) * std::cos(y) * s, 0.0};
  return {(flow.a * std::sin(z) + flow.c * std::cos(y)) * s,
          (flow.b * std::sin(x) + flow.a * std::cos(z)) * s,
          (flow.c * std::sin(y) + flow.b * std::cos(x)) * s};
}

double pressure_at(const ExactFlow& flow, double t, const Point& p) {
  const double s = std::exp(-2.0 * flow.decay_rate() * t);
  const auto [x, y, z] = p;
  if (flow.kind == FlowKind::taylor_green_2d)
    return -0.25 * (std::cos(2.0 * x) + std::cos(2.0 * y)) * s;
  const auto u = velocity_at(flow, 0.0, p);
  const double sq = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
  const double mean = flow.a * flow.a + flow.b * flow.b + flow.c * flow.c;
  return -0.5 * (sq - mean) * s;
}

CoefficientPair expected_coefficient(const ExactFlow& flow, int n) {
  if (n < 0) throw std::invalid_argument("order must be >= 0");
  const double r = flow.decay_rate();
  double su = 1.0;
  double sp = 1.0;
  for (int i = 1; i <= n; ++i) {
    su *= -r / i;
    sp *= -2.0 * r / i;
  }
  CoefficientPair out{initial_velocity(flow), tp_scale(initial_pressure(flow), sp)};
  for (auto& c : out.velocity) c = tp_scale(c, su);
  return out;
}

GaussianPair gaussian_poisson_pair(double half_width, int n_per_axis) {
  const auto p = [](double x, double y, double z) {
    return std::exp(-(x * x + y * y + z * z));
  };
  const auto phi = [](double x, double y, double z) {
    const double r2 = x * x + y * y + z * z;
    return (6.0 - 4.0 * r2) * std::exp(-r2);
  };
  return {FreeSpaceGrid::sample(half_width, n_per_axis, phi),
          FreeSpaceGrid::sample(half_width, n_per_axis, p)};
}

TrigVec random_divergence_free(std::uint64_t seed, int waves, int kmax, double amplitude) {
  if (waves < 0 || kmax < 1) throw std::invalid_argument("need waves >= 0 and kmax >= 1");
  if (!(amplitude > 0.0)) throw std::invalid_argument("amplitude must be > 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-kmax, kmax);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);

  TrigVec u;
  for (int w = 0; w < waves; ++w) {
    Wavevector k;
    do {
      k = {pick(rng), pick(rng), pick(rng)};
    } while (k.is_zero());
    const double k2 = static_cast<double>(k.norm2());
    std::array<Complex, 3> a;
    for (auto& c : a) c = {amp(rng), amp(rng)};
    // Project out the component along k so that i k . a = 0.
    Complex dot{};
    for (Axis ax : kAxes) dot += static_cast<double>(k[ax]) * a[index_of(ax)];
    for (Axis ax : kAxes) a[index_of(ax)] -= dot * (static_cast<double>(k[ax]) / k2);
    for (int c = 0; c < 3; ++c) u[c] = tp_add(u[c], TrigPoly::mode_pair(k, a[c]), 0.0);
  }
  double peak = 0.0;
  for (const auto& c : u) peak = std::max(peak, tp_max_norm(c));
  if (peak > 0.0)
    for (auto& c : u) c = tp_scale(c, amplitude / peak);
  return u;
}

}  // namespace nst
