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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nstaylor/recurrence.hpp"

namespace nst {

template <class F>
struct PartialSum {
  double t = 0.0;
  int order = 0;
  Vec3<F> velocity;
  F pressure;  ///< sums p_0..p_{min(M, N-1)}
};

/// Horner evaluation of sum_{i<=M} u_i t^i and the matching pressure sum.
template <class B>
PartialSum<typename B::Field> evaluate_partial_sum(
    const B& backend, const TaylorCoefficients<typename B::Field>& coeffs, double t, int order);

enum class NormKind { max, energy };

std::string to_string(NormKind k);
NormKind norm_kind_from_string(const std::string& s);

/// One norm per velocity order. Energy norm is sqrt of the integral of |u_n|^2.
template <class B>
std::vector<double> velocity_norms(const B& backend,
                                   const TaylorCoefficients<typename B::Field>& coeffs,
                                   NormKind kind);
template <class B>
std::vector<double> pressure_norms(const B& backend,
                                   const TaylorCoefficients<typename B::Field>& coeffs,
                                   NormKind kind);

struct RadiusEstimate {
  NormKind norm = NormKind::max;
  std::vector<double> norms;                  ///< orders 0..N
  std::vector<std::optional<double>> ratios;  ///< |a_{n+1}| / |a_n|, n = 0..N-1
  std::vector<std::optional<double>> roots;   ///< |a_n|^{1/n}; empty at n = 0
  std::optional<double> radius_hint;          ///< empty means "unbounded"
  std::optional<double> root_hint;
  bool degenerate = false;  ///< every order n >= 1 is zero
  int tail_start = 0;       ///< first ratio index used for the hint
  double tail_max_ratio = 0.0;
  double domb_sykes_intercept = 0.0;
  bool ratios_decreasing = false;

  bool unbounded() const { return !radius_hint.has_value(); }
  std::string summary() const;
};

/// Ratio and root estimates from a norm trajectory. Needs at least four
/// nonzero norms unless the series is degenerate.
RadiusEstimate estimate_radius(std::span<const double> norms, NormKind kind = NormKind::max);

template <class B>
RadiusEstimate estimate_radius(const B& backend,
                               const TaylorCoefficients<typename B::Field>& coeffs,
                               NormKind kind = NormKind::max);

/// Integral of |v|^2 over the domain.
template <class B>
double energy(const B& backend, const Vec3<typename B::Field>& v);

struct ResidualReport {
  double momentum = 0.0;
  double continuity = 0.0;
};

/// Navier-Stokes residual of the order-M partial sum at the sample points,
/// with pressure orders 0..M-1 and term-wise time derivatives.
template <class B>
ResidualReport residual_check(const B& backend,
                              const TaylorCoefficients<typename B::Field>& coeffs, double t,
                              int order, std::span<const Point> samples,
                              const ForcingSeries<typename B::Field>& forcing = {});

/// per_axis^3 points of a shifted lattice on the 2*pi box.
std::vector<Point> default_sample_points(int per_axis = 5);

#define NST_DECLARE_SERIES(B)                                                                 \
  extern template PartialSum<B::Field> evaluate_partial_sum<B>(                               \
      const B&, const TaylorCoefficients<B::Field>&, double, int);                            \
  extern template std::vector<double> velocity_norms<B>(                                      \
      const B&, const TaylorCoefficients<B::Field>&, NormKind);                               \
  extern template std::vector<double> pressure_norms<B>(                                      \
      const B&, const TaylorCoefficients<B::Field>&, NormKind);                               \
  extern template RadiusEstimate estimate_radius<B>(const B&, const TaylorCoefficients<B::Field>&, \
                                                    NormKind);                                \
  extern template double energy<B>(const B&, const Vec3<B::Field>&);                          \
  extern template ResidualReport residual_check<B>(const B&, const TaylorCoefficients<B::Field>&, \
                                                   double, int, std::span<const Point>,       \
                                                   const ForcingSeries<B::Field>&);

NST_DECLARE_SERIES(TrigPolyBackend)
NST_DECLARE_SERIES(GridBackend)
#undef NST_DECLARE_SERIES

}  // namespace nst
