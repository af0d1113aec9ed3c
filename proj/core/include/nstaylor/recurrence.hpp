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

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nstaylor/backends.hpp"
#include "nstaylor/errors.hpp"

namespace nst {

/// Velocity orders 0..N and pressure orders 0..N-1 of the time expansion.
template <class F>
class TaylorCoefficients {
 public:
  TaylorCoefficients(double nu, Vec3<F> initial) : nu_(nu) {
    if (!(nu >= 0.0)) throw std::invalid_argument("viscosity must be >= 0");
    velocity_.push_back(std::move(initial));
  }

  double nu() const { return nu_; }
  /// Highest velocity order N.
  int order() const { return static_cast<int>(velocity_.size()) - 1; }

  const Vec3<F>& velocity(int n) const {
    if (n < 0 || n > order()) throw OrderError("velocity order " + std::to_string(n) + " not present");
    return velocity_[static_cast<std::size_t>(n)];
  }
  const F& pressure(int n) const {
    if (n < 0 || n >= order())
      throw OrderError("pressure order " + std::to_string(n) + " not present");
    return pressure_[static_cast<std::size_t>(n)];
  }
  std::span<const Vec3<F>> velocities() const { return velocity_; }
  std::span<const F> pressures() const { return pressure_; }

  /// Appends u_{N+1} together with p_N.
  void append(Vec3<F> velocity, F pressure) {
    velocity_.push_back(std::move(velocity));
    pressure_.push_back(std::move(pressure));
  }

  /// Direct write access for fault injection in validation tests.
  Vec3<F>& mutable_velocity(int n) {
    static_cast<void>(velocity(n));
    return velocity_[static_cast<std::size_t>(n)];
  }

 private:
  double nu_;
  std::vector<Vec3<F>> velocity_;
  std::vector<F> pressure_;
};

/// f(t) = sum_i f_i t^i; orders past the list are zero.
template <class F>
struct ForcingSeries {
  std::vector<Vec3<F>> terms;

  bool empty() const { return terms.empty(); }
  const Vec3<F>* at(int n) const {
    return n >= 0 && n < static_cast<int>(terms.size()) ? &terms[static_cast<std::size_t>(n)]
                                                         : nullptr;
  }
};

struct OrderDiagnostics {
  int order = 0;
  double max_norm_u = 0.0;  ///< max over components of |u_n|
  double max_norm_p = std::numeric_limits<double>::quiet_NaN();  ///< p_n; NaN at the last order
  double energy_u = 0.0;
  double max_divergence = 0.0;
  double bracket_divergence = 0.0;  ///< div of n*u_n before the 1/n factor; 0 at order 0
  std::size_t complexity = 0;       ///< stored terms (trigpoly) or grid points
  double wall_time_ms = 0.0;
};

/// Per-order output of the pressure and momentum steps, before appending.
template <class F>
struct OrderStep {
  F phi;
  F pressure;
  Vec3<F> bracket;
  Vec3<F> velocity;
};

/// phi_{n-1}, defined so that lap p_{n-1} = -phi_{n-1}.
template <class B>
typename B::Field compute_phi(const B& backend,
                              const TaylorCoefficients<typename B::Field>& coeffs,
                              const ForcingSeries<typename B::Field>& forcing, int n);

/// Solves lap p = -phi in the mean-zero gauge.
template <class B>
typename B::Field solve_pressure(const B& backend, const typename B::Field& phi);

/// Computes order n from orders 0..n-1 without modifying coeffs.
template <class B>
OrderStep<typename B::Field> compute_order(const B& backend,
                                           const TaylorCoefficients<typename B::Field>& coeffs,
                                           const ForcingSeries<typename B::Field>& forcing,
                                           int n);

/// Appends u_n and p_{n-1}. Throws DivergenceError when either the new order
/// or its bracket has divergence above tol_div * max(1, sum_k |d_k u^k|).
template <class B>
OrderDiagnostics advance_order(const B& backend, TaylorCoefficients<typename B::Field>& coeffs,
                               const ForcingSeries<typename B::Field>& forcing, int n,
                               double tol_div);

/// max |div u_n|
template <class B>
double check_divergence(const B& backend, const TaylorCoefficients<typename B::Field>& coeffs,
                        int n);

template <class B>
double divergence_norm(const B& backend, const Vec3<typename B::Field>& v);

struct Tolerances {
  std::optional<double> tol_div;  ///< backend default when unset
  double eps_prune = kDefaultPrune;
  double tol_mean = 1e-10;
};

struct ProblemSpec {
  double nu = 0.0;
  TrigVec initial_velocity;
  std::vector<TrigVec> forcing;
  std::optional<GridSpec> grid;  ///< unset selects the trigpoly backend
  int order = 10;
  Tolerances tolerances;
};

template <class B>
struct Solution {
  B backend;
  TaylorCoefficients<typename B::Field> coeffs;
  std::vector<OrderDiagnostics> diagnostics;
  double tol_div;
};

using RunResult = std::variant<Solution<TrigPolyBackend>, Solution<GridBackend>>;

template <class B>
Solution<B> run_with(const B& backend, const ProblemSpec& problem);

/// Computes orders 1..problem.order. Order failures surface as DivergenceError
/// or EngineError, both carrying the order index.
RunResult run(const ProblemSpec& problem);

#define NST_DECLARE_RECURRENCE(B)                                                          \
  extern template B::Field compute_phi<B>(const B&, const TaylorCoefficients<B::Field>&,   \
                                          const ForcingSeries<B::Field>&, int);            \
  extern template B::Field solve_pressure<B>(const B&, const B::Field&);                   \
  extern template OrderStep<B::Field> compute_order<B>(                                    \
      const B&, const TaylorCoefficients<B::Field>&, const ForcingSeries<B::Field>&, int); \
  extern template OrderDiagnostics advance_order<B>(                                       \
      const B&, TaylorCoefficients<B::Field>&, const ForcingSeries<B::Field>&, int, double); \
  extern template double check_divergence<B>(const B&, const TaylorCoefficients<B::Field>&, \
                                             int);                                         \
  extern template double divergence_norm<B>(const B&, const Vec3<B::Field>&);              \
  extern template Solution<B> run_with<B>(const B&, const ProblemSpec&);

NST_DECLARE_RECURRENCE(TrigPolyBackend)
NST_DECLARE_RECURRENCE(GridBackend)
#undef NST_DECLARE_RECURRENCE

}  // namespace nst
