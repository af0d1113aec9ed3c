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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nstaylor/grid.hpp"

namespace nst {

using Complex = std::complex<double>;

/// Fourier-series coefficients of a real field on a GridSpec.
///
/// Storage is the r2c half spectrum with shape (nz, ny, nx/2+1), kx fastest.
/// Coefficients are normalized so that f(x) = sum_k c_k exp(i k.x), i.e. the
/// forward transform divides by the number of grid points.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(const GridSpec& spec);
  Spectrum(const GridSpec& spec, std::vector<Complex> coeffs);

  const GridSpec& spec() const { return spec_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  int half_nx() const { return spec_.nx / 2 + 1; }

  std::size_t index(int ix, int iy, int iz) const {
    return static_cast<std::size_t>(ix) +
           static_cast<std::size_t>(half_nx()) *
               (static_cast<std::size_t>(iy) + static_cast<std::size_t>(spec_.ny) * iz);
  }

  /// Signed integer wavenumber (mode index) stored at array index i along an axis.
  static int signed_mode(int i, int n) { return i <= n / 2 ? i : i - n; }

  /// Coefficient for integer mode (mx, my, mz); uses conjugate symmetry for mx < 0.
  /// Returns 0 for modes the grid does not store.
  Complex mode(int mx, int my, int mz) const;
  /// Sets mode (mx,my,mz) with mx >= 0. For mx == 0 or the x Nyquist plane the
  /// caller is responsible for setting the conjugate partner too.
  void set_mode(int mx, int my, int mz, Complex value);

  /// Zero-mode coefficient, i.e. the mean of the field.
  Complex mean() const { return coeffs_.empty() ? Complex{} : coeffs_[0]; }
  double max_coeff() const;
  /// Largest |signed mode| present along any axis with |c| > 0; -1 if empty.
  int max_mode() const;
  /// Sum over the full spectrum of |c_k|^2, which is the mean of f^2.
  double mean_square() const;
  /// Zeroes every coefficient with |c| < threshold. Returns how many were cleared.
  std::size_t prune(double threshold);
  std::size_t nonzero_count() const;

  Spectrum& operator+=(const Spectrum& o);
  Spectrum& operator-=(const Spectrum& o);
  Spectrum& operator*=(double s);

  /// Exact evaluation of the trigonometric interpolant at a physical point.
  double evaluate(const Point& x) const;

 private:
  GridSpec spec_;
  std::vector<Complex> coeffs_;
};

Spectrum forward(const GridField& f);
GridField inverse(const Spectrum& s);

/// Spectral derivative. The Nyquist mode along the differentiated axis is zeroed.
Spectrum derivative(const Spectrum& s, Axis axis);
Spectrum laplacian(const Spectrum& s);

/// Solves lap(p) = g per mode with the mean-zero gauge. Throws
/// IncompatibleSourceError if |mean(g)| > tol_mean * max_norm(g).
Spectrum poisson_solve(const Spectrum& g, double tol_mean = 1e-10);

/// Max of |f| over the grid points.
double max_norm(const Spectrum& s);

struct WeightedSpectrum {
  double weight;
  const Spectrum* field;
};

/// sum_i w_i * f_i, then clears coefficients below
/// eps * max_i(|w_i| * max_coeff(f_i)).
Spectrum combine(std::span<const WeightedSpectrum> terms, double eps);

/// Accumulates sum_i w_i * a_i * b_i for dealiased products.
///
/// Factors are lifted once to physical space (padded for exact_padding,
/// truncated for two_thirds) so that a lifted factor can be reused across many
/// products. finish() transforms the accumulated physical field back and clears
/// coefficients below eps * sum_i |w_i| * max|a_i| * max|b_i|.
class ProductAccumulator {
 public:
  struct Lifted {
    std::vector<double> values;
    double max_abs = 0.0;
  };

  explicit ProductAccumulator(const GridSpec& spec);

  static Lifted lift(const Spectrum& s);

  void add(const Lifted& a, const Lifted& b, double weight = 1.0);
  Spectrum finish(double eps = 0.0) const;

  const GridSpec& spec() const { return spec_; }

 private:
  GridSpec spec_;
  std::vector<double> sum_;
  double scale_ = 0.0;
};

/// Shape (nx, ny, nz) of the physical grid products are formed on.
std::array<int, 3> product_grid_shape(const GridSpec& spec);

}  // namespace nst
