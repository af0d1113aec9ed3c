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

#include "nstaylor/recurrence.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <optional>

namespace nst {
namespace {

constexpr int kU = 0;
constexpr int kV = 1;
constexpr int kW = 2;

template <class B>
struct LiftedOrder {
  std::array<typename B::Lifted, 3> u;
  std::array<std::array<typename B::Lifted, 3>, 3> grad;  ///< grad[k][m] = d_m u^k
};

template <class B>
LiftedOrder<B> lift_order(const B& b, const Vec3<typename B::Field>& u) {
  LiftedOrder<B> out;
  for (int k = 0; k < 3; ++k) {
    out.u[k] = b.lift(u[k]);
    for (Axis m : kAxes) out.grad[k][index_of(m)] = b.lift(b.derivative(u[k], m));
  }
  return out;
}

template <class B>
struct Accumulators {
  std::optional<typename B::Products> phi;
  std::array<std::optional<typename B::Products>, 3> advection;
};

/// Adds the (i, j) term of the phi and advection convolutions, i = a, j = c.
template <class B>
void add_pair(Accumulators<B>& acc, const LiftedOrder<B>& a, const LiftedOrder<B>& c) {
  if (acc.phi) {
    auto& phi = *acc.phi;
    for (int k = 0; k < 3; ++k) phi.add(a.grad[k][k], c.grad[k][k], 1.0);
    phi.add(a.grad[kV][0], c.grad[kU][1], 2.0);
    phi.add(a.grad[kW][0], c.grad[kU][2], 2.0);
    phi.add(a.grad[kV][2], c.grad[kW][1], 2.0);
  }
  for (int k = 0; k < 3; ++k) {
    if (!acc.advection[k]) continue;
    for (int m = 0; m < 3; ++m) acc.advection[k]->add(a.u[m], c.grad[k][m], 1.0);
  }
}

/// Sums over i + j = n - 1, lifting each order once per call.
template <class B>
void convolve(const B& b, const TaylorCoefficients<typename B::Field>& coeffs, int n,
              Accumulators<B>& acc) {
  const int last = n - 1;
  for (int i = 0; i <= last - i; ++i) {
    const int j = last - i;
    const LiftedOrder<B> li = lift_order(b, coeffs.velocity(i));
    if (i == j) {
      add_pair(acc, li, li);
      continue;
    }
    const LiftedOrder<B> lj = lift_order(b, coeffs.velocity(j));
    add_pair(acc, li, lj);
    add_pair(acc, lj, li);
  }
}

template <class B>
typename B::Field forcing_divergence(const B& b, const ForcingSeries<typename B::Field>& forcing,
                                     int n) {
  const auto* f = forcing.at(n);
  if (f == nullptr) return b.zero();
  const std::array<typename B::Field, 3> d{b.derivative((*f)[0], Axis::x),
                                           b.derivative((*f)[1], Axis::y),
                                           b.derivative((*f)[2], Axis::z)};
  const std::array<Weighted<typename B::Field>, 3> parts{
      {{1.0, &d[0]}, {1.0, &d[1]}, {1.0, &d[2]}}};
  return b.combine(parts, b.eps_prune());
}

template <class B>
void require_order(const TaylorCoefficients<typename B::Field>& coeffs, int n) {
  if (n < 1) throw OrderError("order must be >= 1, got " + std::to_string(n));
  if (coeffs.order() < n - 1)
    throw OrderError("order " + std::to_string(n) + " needs orders 0.." + std::to_string(n - 1) +
                     ", have 0.." + std::to_string(coeffs.order()));
}

template <class B>
typename B::Field phi_from(const B& b, const typename B::Field& products,
                           const ForcingSeries<typename B::Field>& forcing, int n) {
  if (forcing.at(n - 1) == nullptr) return products;
  const auto div_f = forcing_divergence(b, forcing, n - 1);
  const std::array<Weighted<typename B::Field>, 2> parts{{{1.0, &products}, {-1.0, &div_f}}};
  return b.combine(parts, b.eps_prune());
}

template <class B>
double divergence_scale(const B& b, const Vec3<typename B::Field>& v) {
  double s = 0.0;
  for (Axis a : kAxes) s += b.max_norm(b.derivative(v[a], a));
  return std::max(1.0, s);
}

}  // namespace

template <class B>
double divergence_norm(const B& b, const Vec3<typename B::Field>& v) {
  const std::array<typename B::Field, 3> d{b.derivative(v[0], Axis::x),
                                           b.derivative(v[1], Axis::y),
                                           b.derivative(v[2], Axis::z)};
  const std::array<Weighted<typename B::Field>, 3> parts{
      {{1.0, &d[0]}, {1.0, &d[1]}, {1.0, &d[2]}}};
  return b.max_norm(b.combine(parts, 0.0));
}

template <class B>
typename B::Field compute_phi(const B& b, const TaylorCoefficients<typename B::Field>& coeffs,
                              const ForcingSeries<typename B::Field>& forcing, int n) {
  require_order<B>(coeffs, n);
  Accumulators<B> acc;
  acc.phi.emplace(b.products());
  convolve(b, coeffs, n, acc);
  return phi_from(b, acc.phi->finish(b.eps_prune()), forcing, n);
}

template <class B>
typename B::Field solve_pressure(const B& b, const typename B::Field& phi) {
  return b.scale(b.poisson(phi), -1.0);
}

template <class B>
OrderStep<typename B::Field> compute_order(const B& b,
                                           const TaylorCoefficients<typename B::Field>& coeffs,
                                           const ForcingSeries<typename B::Field>& forcing,
                                           int n) {
  using Field = typename B::Field;
  require_order<B>(coeffs, n);
  Accumulators<B> acc;
  acc.phi.emplace(b.products());
  for (auto& a : acc.advection) a.emplace(b.products());
  convolve(b, coeffs, n, acc);

  OrderStep<Field> step;
  step.phi = phi_from(b, acc.phi->finish(b.eps_prune()), forcing, n);
  step.pressure = solve_pressure(b, step.phi);

  const auto& prev = coeffs.velocity(n - 1);
  const auto* f = forcing.at(n - 1);
  const double nu = coeffs.nu();
  for (Axis a : kAxes) {
    const int k = index_of(a);
    const Field viscous = nu == 0.0 ? b.zero() : b.laplacian(prev[k]);
    const Field advection = acc.advection[k]->finish(b.eps_prune());
    const Field grad_p = b.derivative(step.pressure, a);
    std::vector<Weighted<Field>> parts{{nu, &viscous}, {-1.0, &advection}, {-1.0, &grad_p}};
    if (f != nullptr) parts.push_back({1.0, &(*f)[k]});
    step.bracket[k] = b.combine(parts, b.eps_prune());
    step.velocity[k] = b.scale(step.bracket[k], 1.0 / n);
  }
  return step;
}

template <class B>
OrderDiagnostics advance_order(const B& b, TaylorCoefficients<typename B::Field>& coeffs,
                               const ForcingSeries<typename B::Field>& forcing, int n,
                               double tol_div) {
  if (coeffs.order() != n - 1)
    throw OrderError("advance_order expects order " + std::to_string(coeffs.order() + 1) +
                     ", got " + std::to_string(n));
  const auto start = std::chrono::steady_clock::now();
  auto step = compute_order(b, coeffs, forcing, n);

  OrderDiagnostics d;
  d.order = n;
  d.bracket_divergence = divergence_norm(b, step.bracket);
  const double bracket_limit = tol_div * divergence_scale(b, step.bracket);
  if (!(d.bracket_divergence <= bracket_limit))
    throw DivergenceError(n, d.bracket_divergence, bracket_limit);
  d.max_divergence = divergence_norm(b, step.velocity);
  const double limit = tol_div * divergence_scale(b, step.velocity);
  if (!(d.max_divergence <= limit)) throw DivergenceError(n, d.max_divergence, limit);

  for (const auto& c : step.velocity) {
    d.max_norm_u = std::max(d.max_norm_u, b.max_norm(c));
    d.energy_u += b.mean_square(c) * b.volume();
    d.complexity += b.complexity(c);
  }
  coeffs.append(std::move(step.velocity), std::move(step.pressure));
  d.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return d;
}

template <class B>
double check_divergence(const B& b, const TaylorCoefficients<typename B::Field>& coeffs, int n) {
  return divergence_norm(b, coeffs.velocity(n));
}

template <class B>
Solution<B> run_with(const B& b, const ProblemSpec& problem) {
  using Field = typename B::Field;
  if (problem.order < 0) throw std::invalid_argument("order must be >= 0");
  const double tol_div = problem.tolerances.tol_div.value_or(b.default_tol_div());

  Vec3<Field> u0;
  for (int k = 0; k < 3; ++k) u0[k] = b.from_trigpoly(problem.initial_velocity[k]);
  ForcingSeries<Field> forcing;
  for (const auto& f : problem.forcing) {
    Vec3<Field> term;
    for (int k = 0; k < 3; ++k) term[k] = b.from_trigpoly(f[k]);
    forcing.terms.push_back(std::move(term));
  }

  Solution<B> sol{b, TaylorCoefficients<Field>(problem.nu, std::move(u0)), {}, tol_div};

  OrderDiagnostics d0;
  d0.order = 0;
  d0.max_divergence = check_divergence(b, sol.coeffs, 0);
  const double limit0 = tol_div * divergence_scale(b, sol.coeffs.velocity(0));
  if (!(d0.max_divergence <= limit0)) throw DivergenceError(0, d0.max_divergence, limit0);
  for (const auto& c : sol.coeffs.velocity(0)) {
    d0.max_norm_u = std::max(d0.max_norm_u, b.max_norm(c));
    d0.energy_u += b.mean_square(c) * b.volume();
    d0.complexity += b.complexity(c);
  }
  sol.diagnostics.push_back(d0);

  for (int n = 1; n <= problem.order; ++n) {
    try {
      sol.diagnostics.push_back(advance_order(b, sol.coeffs, forcing, n, tol_div));
    } catch (const DivergenceError&) {
      throw;
    } catch (const std::exception& e) {
      throw EngineError(n, e.what());
    }
    sol.diagnostics[static_cast<std::size_t>(n - 1)].max_norm_p =
        b.max_norm(sol.coeffs.pressure(n - 1));
  }
  return sol;
}

RunResult run(const ProblemSpec& problem) {
  const auto& t = problem.tolerances;
  if (problem.grid) return run_with(GridBackend(*problem.grid, t.eps_prune, t.tol_mean), problem);
  return run_with(TrigPolyBackend(t.eps_prune, t.tol_mean), problem);
}

#define NST_INSTANTIATE_RECURRENCE(B)                                                          \
  template B::Field compute_phi<B>(const B&, const TaylorCoefficients<B::Field>&,               \
                                   const ForcingSeries<B::Field>&, int);                        \
  template B::Field solve_pressure<B>(const B&, const B::Field&);                               \
  template OrderStep<B::Field> compute_order<B>(const B&, const TaylorCoefficients<B::Field>&,  \
                                                const ForcingSeries<B::Field>&, int);           \
  template OrderDiagnostics advance_order<B>(const B&, TaylorCoefficients<B::Field>&,           \
                                             const ForcingSeries<B::Field>&, int, double);      \
  template double check_divergence<B>(const B&, const TaylorCoefficients<B::Field>&, int);      \
  template double divergence_norm<B>(const B&, const Vec3<B::Field>&);                          \
  template Solution<B> run_with<B>(const B&, const ProblemSpec&);

NST_INSTANTIATE_RECURRENCE(TrigPolyBackend)
NST_INSTANTIATE_RECURRENCE(GridBackend)

}  // namespace nst
