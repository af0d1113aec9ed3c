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

#include <compare>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "nstaylor/grid.hpp"
#include "nstaylor/spectrum.hpp"
#include "nstaylor/vec3.hpp"

namespace nst {

/// Integer wavevector of a Fourier mode exp(i k.x) on the 2*pi periodic box.
struct Wavevector {
  int x = 0;
  int y = 0;
  int z = 0;

  auto operator<=>(const Wavevector&) const = default;

  Wavevector operator-() const { return {-x, -y, -z}; }
  friend Wavevector operator+(Wavevector a, Wavevector b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  int operator[](Axis a) const { return a == Axis::x ? x : a == Axis::y ? y : z; }
  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
  /// Strictly positive in lexicographic order; exactly one of k, -k is.
  bool is_upper() const { return x > 0 || (x == 0 && (y > 0 || (y == 0 && z > 0))); }
  long norm2() const { return long{x} * x + long{y} * y + long{z} * z; }
};

/// Default relative threshold below which terms are dropped after add/mul.
inline constexpr double kDefaultPrune = 1e-14;

/// Finite real trigonometric polynomial sum_k c_k exp(i k.x) over integer k.
///
/// Terms are kept sorted lexicographically by wavevector, with exact Hermitian
/// symmetry c_{-k} == conj(c_k) and no stored zeros. Every operation below
/// returns a polynomial with the same guarantees.
class TrigPoly {
 public:
  struct Term {
    Wavevector k;
    Complex c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  TrigPoly() = default;

  /// Sorts, merges duplicates and drops zeros. Throws std::invalid_argument
  /// when |c_{-k} - conj(c_k)| exceeds hermitian_tol * max|c|; otherwise the
  /// pair is replaced by its symmetric average.
  static TrigPoly from_terms(std::vector<Term> terms, double hermitian_tol = 1e-12);

  static TrigPoly constant(double value);
  /// amplitude * cos(k.x)
  static TrigPoly cosine(Wavevector k, double amplitude = 1.0);
  /// amplitude * sin(k.x)
  static TrigPoly sine(Wavevector k, double amplitude = 1.0);
  /// c exp(i k.x) + conj(c) exp(-i k.x); for k = 0 only Re(c).
  static TrigPoly mode_pair(Wavevector k, Complex c);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Complex coeff(Wavevector k) const;
  double max_magnitude() const;
  /// Largest |component| over all stored wavevectors, -1 when empty.
  int max_mode() const;
  int max_mode(Axis a) const;
  /// Exact check, or within tol * max|c| when tol > 0.
  bool is_hermitian(double tol = 0.0) const;
  /// sum |c_k|; an upper bound for the sup norm.
  double l1_norm() const;
  /// sum |c_k|^2, the spatial mean of f^2.
  double mean_square() const;

  std::vector<Wavevector> support() const;

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  friend class TrigPolyBuilder;
  explicit TrigPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}

  std::vector<Term> terms_;
};

struct WeightedPoly {
  double weight;
  const TrigPoly* poly;
};

/// sum w_i p_i; drops terms below eps * max_i(|w_i| * max|p_i|).
TrigPoly tp_combine(std::span<const WeightedPoly> terms, double eps = kDefaultPrune);
TrigPoly tp_add(const TrigPoly& a, const TrigPoly& b, double eps = kDefaultPrune);
TrigPoly tp_sub(const TrigPoly& a, const TrigPoly& b, double eps = kDefaultPrune);
TrigPoly tp_scale(const TrigPoly& a, double c);
/// Drops every term with |c| < threshold.
TrigPoly tp_prune(const TrigPoly& a, double threshold);

/// Exact mode convolution; drops terms below eps * max|a| * max|b|.
TrigPoly tp_mul(const TrigPoly& a, const TrigPoly& b, double eps = kDefaultPrune);

TrigPoly tp_derivative(const TrigPoly& a, Axis axis);
TrigPoly tp_laplacian(const TrigPoly& a);

/// p with lap(p) = g and zero mean. Throws IncompatibleSourceError when
/// |c_0| > tol * max|c|.
TrigPoly tp_poisson_inverse(const TrigPoly& g, double tol = kDefaultPrune);

double tp_eval(const TrigPoly& a, const Point& x);

/// Places the modes on a grid's half spectrum. Mode index m along an axis maps
/// to wavenumber 2*pi*m/L, so the polynomial is sampled as a function of the
/// phase 2*pi*x/L. Throws ResolutionError if any |m| >= n/2.
Spectrum tp_to_spectrum(const TrigPoly& a, const GridSpec& spec);
GridField tp_to_grid(const TrigPoly& a, const GridSpec& spec);
/// Inverse of tp_to_spectrum. Coefficients below eps * max|c| are dropped;
/// Nyquist content above that level throws ResolutionError.
TrigPoly tp_from_spectrum(const Spectrum& s, double eps = 0.0);

/// Max |f| sampled on a 2*pi grid fine enough to hold every mode.
double tp_max_norm(const TrigPoly& a);

/// One line "kx ky kz re im" per term in lexicographic order.
void tp_dump(std::ostream& out, const TrigPoly& a);
TrigPoly tp_parse(std::istream& in);

using TrigVec = Vec3<TrigPoly>;

}  // namespace nst
