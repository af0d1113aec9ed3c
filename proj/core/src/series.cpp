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

#include "nstaylor/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nst {
namespace {

template <class B>
typename B::Field horner(const B& b, std::span<const typename B::Field> terms, double t) {
  using Field = typename B::Field;
  if (terms.empty()) return b.zero();
  Field acc = terms.back();
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    const std::array<Weighted<Field>, 2> parts{{{t, &acc}, {1.0, &*it}}};
    acc = b.combine(parts, 0.0);
  }
  return acc;
}

template <class B>
double field_norm(const B& b, const typename B::Field& f, NormKind kind) {
  return kind == NormKind::max ? b.max_norm(f) : std::sqrt(b.mean_square(f) * b.volume());
}

/// Least-squares line y = a + s x; returns a.
double intercept(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) return sy / n;
  const double slope = (n * sxy - sx * sy) / den;
  return (sy - slope * sx) / n;
}

}  // namespace

std::string to_string(NormKind k) { return k == NormKind::max ? "max" : "energy"; }

NormKind norm_kind_from_string(const std::string& s) {
  if (s == "max") return NormKind::max;
  if (s == "energy") return NormKind::energy;
  throw std::invalid_argument("unknown norm '" + s + "'");
}

template <class B>
PartialSum<typename B::Field> evaluate_partial_sum(
    const B& b, const TaylorCoefficients<typename B::Field>& coeffs, double t, int order) {
  using Field = typename B::Field;
  if (order < 0 || order > coeffs.order())
    throw OrderError("partial sum order " + std::to_string(order) + " outside 0.." +
                     std::to_string(coeffs.order()));
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  PartialSum<Field> out;
  out.t = t;
  out.order = order;
  const auto vel = coeffs.velocities().subspan(0, static_cast<std::size_t>(order) + 1);
  const auto pre = coeffs.pressures().subspan(
      0, static_cast<std::size_t>(std::min(order + 1, coeffs.order())));
  if (t == 0.0) {
    out.velocity = vel.front();
    out.pressure = pre.empty() ? b.zero() : pre.front();
    return out;
  }
  for (int k = 0; k < 3; ++k) {
    std::vector<Field> comp;
    comp.reserve(vel.size());
    for (const auto& v : vel) comp.push_back(v[k]);
    out.velocity[k] = horner(b, std::span<const Field>(comp), t);
  }
  out.pressure = horner(b, pre, t);
  return out;
}

template <class B>
std::vector<double> velocity_norms(const B& b, const TaylorCoefficients<typename B::Field>& coeffs,
                                   NormKind kind) {
  std::vector<double> out;
  for (const auto& v : coeffs.velocities()) {
    if (kind == NormKind::energy) {
      out.push_back(std::sqrt(energy(b, v)));
      continue;
    }
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, b.max_norm(c));
    out.push_back(m);
  }
  return out;
}

template <class B>
std::vector<double> pressure_norms(const B& b, const TaylorCoefficients<typename B::Field>& coeffs,
                                   NormKind kind) {
  std::vector<double> out;
  for (const auto& p : coeffs.pressures()) out.push_back(field_norm(b, p, kind));
  return out;
}

RadiusEstimate estimate_radius(std::span<const double> norms, NormKind kind) {
  RadiusEstimate r;
  r.norm = kind;
  r.norms.assign(norms.begin(), norms.end());
  for (double v : norms)
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("norms must be finite and >= 0");

  const std::size_t count = norms.size();
  r.degenerate = count >= 1 && std::all_of(norms.begin() + 1, norms.end(),
                                           [](double v) { return v == 0.0; });
  for (std::size_t n = 0; n + 1 < count; ++n)
    r.ratios.push_back(norms[n] > 0.0 ? std::optional(norms[n + 1] / norms[n]) : std::nullopt);
  for (std::size_t n = 0; n < count; ++n)
    r.roots.push_back(n > 0 && norms[n] > 0.0
                          ? std::optional(std::pow(norms[n], 1.0 / static_cast<double>(n)))
                          : std::nullopt);
  if (r.degenerate) return r;

  const auto nonzero = std::count_if(norms.begin(), norms.end(), [](double v) { return v > 0.0; });
  if (nonzero < 4)
    throw InsufficientDataError("radius estimate needs at least 4 nonzero orders, got " +
                                std::to_string(nonzero));

  r.tail_start = static_cast<int>(r.ratios.size() / 2);
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t n = static_cast<std::size_t>(r.tail_start); n < r.ratios.size(); ++n) {
    if (!r.ratios[n]) continue;
    xs.push_back(1.0 / static_cast<double>(n + 1));
    ys.push_back(*r.ratios[n]);
  }
  if (ys.size() < 2)
    throw InsufficientDataError("radius estimate needs at least 2 usable tail ratios");
  r.tail_max_ratio = *std::max_element(ys.begin(), ys.end());
  r.domb_sykes_intercept = intercept(xs, ys);
  r.ratios_decreasing = std::is_sorted(ys.rbegin(), ys.rend()) && ys.front() > ys.back();
  const bool vanishing = r.tail_max_ratio == 0.0 ||
                         (r.ratios_decreasing && r.domb_sykes_intercept <= 0.05 * r.tail_max_ratio);
  if (!vanishing) r.radius_hint = 1.0 / r.tail_max_ratio;

  for (auto it = r.roots.rbegin(); it != r.roots.rend(); ++it)
    if (*it && **it > 0.0) {
      r.root_hint = 1.0 / **it;
      break;
    }
  return r;
}

std::string RadiusEstimate::summary() const {
  std::ostringstream s;
  s << "empirical hint (" << to_string(norm) << " norm): ";
  if (degenerate) {
    s << "every order above 0 vanishes; the series is a constant and the radius is unbounded";
  } else if (unbounded()) {
    s << "coefficient ratios decrease toward 0, consistent with an unbounded radius; "
         "this is not a proof of convergence";
  } else {
    s << "ratio estimates suggest a radius near " << *radius_hint
      << "; this is not a proof of convergence";
  }
  return s.str();
}

template <class B>
RadiusEstimate estimate_radius(const B& b, const TaylorCoefficients<typename B::Field>& coeffs,
                               NormKind kind) {
  const auto norms = velocity_norms(b, coeffs, kind);
  return estimate_radius(std::span<const double>(norms), kind);
}

template <class B>
double energy(const B& b, const Vec3<typename B::Field>& v) {
  double s = 0.0;
  for (const auto& c : v) s += b.mean_square(c);
  return s * b.volume();
}

template <class B>
ResidualReport residual_check(const B& b, const TaylorCoefficients<typename B::Field>& coeffs,
                              double t, int order, std::span<const Point> samples,
                              const ForcingSeries<typename B::Field>& forcing) {
  using Field = typename B::Field;
  if (order < 1) throw OrderError("residual check needs order >= 1");
  if (order > coeffs.order())
    throw OrderError("residual order " + std::to_string(order) + " exceeds " +
                     std::to_string(coeffs.order()));
  const auto vel = coeffs.velocities().subspan(0, static_cast<std::size_t>(order) + 1);
  const auto pre = coeffs.pressures().subspan(0, static_cast<std::size_t>(order));

  Vec3<Field> u;
  Vec3<Field> du_dt;
  Vec3<Field> f;
  for (int k = 0; k < 3; ++k) {
    std::vector<Field> comp;
    std::vector<Field> rate;
    for (std::size_t i = 0; i < vel.size(); ++i) {
      comp.push_back(vel[i][k]);
      if (i > 0) rate.push_back(b.scale(vel[i][k], static_cast<double>(i)));
    }
    u[k] = horner(b, std::span<const Field>(comp), t);
    du_dt[k] = horner(b, std::span<const Field>(rate), t);
    std::vector<Field> force;
    for (const auto& term : forcing.terms) force.push_back(term[k]);
    f[k] = horner(b, std::span<const Field>(force), t);
  }
  const Field p = horner(b, pre, t);

  std::array<Field, 3> grad_p;
  std::array<std::array<Field, 3>, 3> grad_u;
  std::array<Field, 3> lap_u;
  for (Axis a : kAxes) {
    grad_p[index_of(a)] = b.derivative(p, a);
    for (int k = 0; k < 3; ++k) grad_u[k][index_of(a)] = b.derivative(u[k], a);
  }
  for (int k = 0; k < 3; ++k) lap_u[k] = b.laplacian(u[k]);

  const double nu = coeffs.nu();
  ResidualReport out;
  for (const Point& x : samples) {
    std::array<double, 3> ux{};
    for (int k = 0; k < 3; ++k) ux[k] = b.evaluate(u[k], x);
    double div = 0.0;
    for (int k = 0; k < 3; ++k) {
      double adv = 0.0;
      for (int m = 0; m < 3; ++m) adv += ux[m] * b.evaluate(grad_u[k][m], x);
      const double r = b.evaluate(du_dt[k], x) + adv + b.evaluate(grad_p[k], x) -
                       nu * b.evaluate(lap_u[k], x) - b.evaluate(f[k], x);
      out.momentum = std::max(out.momentum, std::abs(r));
      div += b.evaluate(grad_u[k][k], x);
    }
    out.continuity = std::max(out.continuity, std::abs(div));
  }
  return out;
}

std::vector<Point> default_sample_points(int per_axis) {
  if (per_axis < 1) throw std::invalid_argument("need at least one sample per axis");
  std::vector<Point> pts;
  const double h = 2.0 * std::numbers::pi / per_axis;
  for (int k = 0; k < per_axis; ++k)
    for (int j = 0; j < per_axis; ++j)
      for (int i = 0; i < per_axis; ++i)
        pts.push_back({(i + 0.31) * h, (j + 0.57) * h, (k + 0.13) * h});
  return pts;
}

#define NST_INSTANTIATE_SERIES(B)                                                             \
  template PartialSum<B::Field> evaluate_partial_sum<B>(const B&,                             \
                                                        const TaylorCoefficients<B::Field>&,  \
                                                        double, int);                         \
  template std::vector<double> velocity_norms<B>(const B&, const TaylorCoefficients<B::Field>&, \
                                                 NormKind);                                   \
  template std::vector<double> pressure_norms<B>(const B&, const TaylorCoefficients<B::Field>&, \
                                                 NormKind);                                   \
  template RadiusEstimate estimate_radius<B>(const B&, const TaylorCoefficients<B::Field>&,    \
                                             NormKind);                                       \
  template double energy<B>(const B&, const Vec3<B::Field>&);                                 \
  template ResidualReport residual_check<B>(const B&, const TaylorCoefficients<B::Field>&,     \
                                            double, int, std::span<const Point>,              \
                                            const ForcingSeries<B::Field>&);

NST_INSTANTIATE_SERIES(TrigPolyBackend)
NST_INSTANTIATE_SERIES(GridBackend)

}  // namespace nst
