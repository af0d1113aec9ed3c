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
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "nstaylor/vec3.hpp"

namespace nst {

/// How pointwise products remove aliased modes.
///
/// two_thirds truncates both factors to |k| <= (n-1)/3 per axis before the
/// product. exact_padding evaluates the product on a 3n/2 grid, which is
/// alias-free for factors supported strictly below the Nyquist mode. With
/// exact_padding, order-n coefficients of data band-limited to k0 stay within
/// (n+1)*k0 per axis, so a grid with n_axis > 2*(N+1)*k0 resolves a run to
/// order N without truncation.
enum class Dealias { two_thirds, exact_padding };

std::string to_string(Dealias d);
Dealias dealias_from_string(const std::string& s);

/// Uniform periodic grid on [0,lx) x [0,ly) x [0,lz).
struct GridSpec {
  int nx = 32;
  int ny = 32;
  int nz = 32;
  double lx = 2.0 * std::numbers::pi;
  double ly = 2.0 * std::numbers::pi;
  double lz = 2.0 * std::numbers::pi;
  Dealias dealias = Dealias::two_thirds;

  static GridSpec cube(int n, Dealias d = Dealias::two_thirds);

  /// Throws std::invalid_argument unless every n is even and >= 4 and every L > 0.
  void validate() const;

  std::size_t size() const { return static_cast<std::size_t>(nx) * ny * nz; }
  /// Number of complex modes in the half-spectrum layout (nz, ny, nx/2+1).
  std::size_t spectral_size() const {
    return static_cast<std::size_t>(nz) * ny * (nx / 2 + 1);
  }
  int points(Axis a) const;
  double length(Axis a) const;
  double volume() const { return lx * ly * lz; }
  double spacing(Axis a) const { return length(a) / points(a); }

  /// Same points and box; the dealias rule is not part of the geometry.
  bool same_geometry(const GridSpec& o) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Real scalar samples on a GridSpec, x index fastest.
class GridField {
 public:
  GridField() = default;
  explicit GridField(const GridSpec& spec, double fill = 0.0);
  GridField(const GridSpec& spec, std::vector<double> values);

  template <class Fn>
  static GridField sample(const GridSpec& spec, Fn&& fn) {
    GridField f(spec);
    for (int k = 0; k < spec.nz; ++k)
      for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i)
          f(i, j, k) = fn(i * spec.lx / spec.nx, j * spec.ly / spec.ny,
                          k * spec.lz / spec.nz);
    return f;
  }

  const GridSpec& spec() const { return spec_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::size_t size() const { return values_.size(); }

  double& operator()(int i, int j, int k) { return values_[index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return values_[index(i, j, k)]; }

  Point coordinate(int i, int j, int k) const;

  double max_abs() const;
  double mean() const;
  bool all_finite() const;

  GridField& operator+=(const GridField& o);
  GridField& operator-=(const GridField& o);
  GridField& operator*=(double s);

 private:
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(spec_.nx) *
               (static_cast<std::size_t>(j) + static_cast<std::size_t>(spec_.ny) * k);
  }

  GridSpec spec_;
  std::vector<double> values_;
};

GridField operator+(GridField a, const GridField& b);
GridField operator-(GridField a, const GridField& b);
GridField operator*(double s, GridField a);

/// Largest pointwise difference; throws GridMismatchError on different grids.
double max_abs_diff(const GridField& a, const GridField& b);

using VectorGridField = Vec3<GridField>;

void require_same_grid(const GridSpec& a, const GridSpec& b);

}  // namespace nst
