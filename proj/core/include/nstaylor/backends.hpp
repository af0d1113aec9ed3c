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

#include <concepts>
#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>

#include "nstaylor/spectrum.hpp"
#include "nstaylor/trigpoly.hpp"

namespace nst {

template <class F>
struct Weighted {
  double weight;
  const F* field;
};

/// Field arithmetic the Taylor recurrence needs from a representation.
///
/// Lifted is a factor prepared for repeated use in products; Products
/// accumulates sum_i w_i a_i b_i and finishes with relative pruning.
template <class B>
concept RecurrenceBackend =
    requires(const B& b, const typename B::Field& f, Axis axis, const Point& p,
             std::span<const Weighted<typename B::Field>> terms,
             typename B::Products& products, const typename B::Lifted& lifted) {
      { b.zero() } -> std::same_as<typename B::Field>;
      { b.from_trigpoly(TrigPoly{}) } -> std::same_as<typename B::Field>;
      { b.to_trigpoly(f) } -> std::same_as<TrigPoly>;
      { b.derivative(f, axis) } -> std::same_as<typename B::Field>;
      { b.laplacian(f) } -> std::same_as<typename B::Field>;
      { b.combine(terms, 0.0) } -> std::same_as<typename B::Field>;
      { b.scale(f, 1.0) } -> std::same_as<typename B::Field>;
      { b.poisson(f) } -> std::same_as<typename B::Field>;
      { b.lift(f) } -> std::same_as<typename B::Lifted>;
      { b.products() } -> std::same_as<typename B::Products>;
      products.add(lifted, lifted, 1.0);
      { products.finish(0.0) } -> std::same_as<typename B::Field>;
      { b.max_norm(f) } -> std::convertible_to<double>;
      { b.mean_square(f) } -> std::convertible_to<double>;
      { b.volume() } -> std::convertible_to<double>;
      { b.evaluate(f, p) } -> std::convertible_to<double>;
      { b.complexity(f) } -> std::convertible_to<std::size_t>;
      { b.eps_prune() } -> std::convertible_to<double>;
      { b.default_tol_div() } -> std::convertible_to<double>;
    };

/// Exact trigonometric-polynomial arithmetic on the 2*pi box.
class TrigPolyBackend {
 public:
  using Field = TrigPoly;
  using Lifted = TrigPoly;

  class Products {
   public:
    void add(const Lifted& a, const Lifted& b, double weight = 1.0);
    Field finish(double eps) const;

   private:
    TrigPoly sum_;
    double scale_ = 0.0;
  };

  static constexpr std::string_view kName = "trigpoly";

  explicit TrigPolyBackend(double eps_prune = kDefaultPrune, double tol_mean = 1e-10)
      : eps_prune_(eps_prune), tol_mean_(tol_mean) {}

  Field zero() const { return {}; }
  Field from_trigpoly(const TrigPoly& p) const { return p; }
  TrigPoly to_trigpoly(const Field& f) const { return f; }
  Field derivative(const Field& f, Axis a) const { return tp_derivative(f, a); }
  Field laplacian(const Field& f) const { return tp_laplacian(f); }
  Field combine(std::span<const Weighted<Field>> terms, double eps) const;
  Field scale(const Field& f, double s) const { return tp_scale(f, s); }
  /// lap(p) = rhs, mean zero.
  Field poisson(const Field& rhs) const;
  Lifted lift(const Field& f) const { return f; }
  Products products() const { return {}; }
  double max_norm(const Field& f) const { return tp_max_norm(f); }
  double mean_square(const Field& f) const { return f.mean_square(); }
  double volume() const { return 8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi; }
  double evaluate(const Field& f, const Point& x) const { return tp_eval(f, x); }
  std::size_t complexity(const Field& f) const { return f.size(); }
  double eps_prune() const { return eps_prune_; }
  double tol_mean() const { return tol_mean_; }
  double default_tol_div() const { return 1e-12; }

 private:
  double eps_prune_;
  double tol_mean_;
};

/// Pseudospectral arithmetic on a periodic GridSpec; fields are Spectrum values.
class GridBackend {
 public:
  using Field = Spectrum;
  using Lifted = ProductAccumulator::Lifted;

  class Products {
   public:
    explicit Products(const GridSpec& spec) : acc_(spec) {}
    void add(const Lifted& a, const Lifted& b, double weight = 1.0) { acc_.add(a, b, weight); }
    Field finish(double eps) const { return acc_.finish(eps); }

   private:
    ProductAccumulator acc_;
  };

  static constexpr std::string_view kName = "grid";

  explicit GridBackend(const GridSpec& spec, double eps_prune = kDefaultPrune,
                       double tol_mean = 1e-10);

  const GridSpec& spec() const { return spec_; }

  Field zero() const { return Spectrum(spec_); }
  /// Exact placement of the modes; throws ResolutionError if they do not fit.
  Field from_trigpoly(const TrigPoly& p) const { return tp_to_spectrum(p, spec_); }
  TrigPoly to_trigpoly(const Field& f) const { return tp_from_spectrum(f); }
  Field derivative(const Field& f, Axis a) const { return nst::derivative(f, a); }
  Field laplacian(const Field& f) const { return nst::laplacian(f); }
  Field combine(std::span<const Weighted<Field>> terms, double eps) const;
  Field scale(const Field& f, double s) const;
  Field poisson(const Field& rhs) const { return poisson_solve(rhs, tol_mean_); }
  Lifted lift(const Field& f) const { return ProductAccumulator::lift(f); }
  Products products() const { return Products(spec_); }
  double max_norm(const Field& f) const { return nst::max_norm(f); }
  double mean_square(const Field& f) const { return f.mean_square(); }
  double volume() const { return spec_.volume(); }
  double evaluate(const Field& f, const Point& x) const { return f.evaluate(x); }
  std::size_t complexity(const Field&) const { return spec_.size(); }
  double eps_prune() const { return eps_prune_; }
  double tol_mean() const { return tol_mean_; }
  double default_tol_div() const { return 1e-9; }

 private:
  GridSpec spec_;
  double eps_prune_;
  double tol_mean_;
};

static_assert(RecurrenceBackend<TrigPolyBackend>);
static_assert(RecurrenceBackend<GridBackend>);

}  // namespace nst
