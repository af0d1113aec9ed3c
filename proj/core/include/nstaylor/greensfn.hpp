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

#include <string>
#include <vector>

#include "nstaylor/field_io.hpp"

namespace nst {

/// Cell-centred samples on [-R, R]^3: x_i = -R + (i + 1/2) h with h = 2R / n.
class FreeSpaceGrid {
 public:
  FreeSpaceGrid() = default;
  FreeSpaceGrid(double half_width, int n_per_axis, double fill = 0.0);
  FreeSpaceGrid(double half_width, int n_per_axis, std::vector<double> values);

  template <class Fn>
  static FreeSpaceGrid sample(double half_width, int n_per_axis, Fn&& fn) {
    FreeSpaceGrid g(half_width, n_per_axis);
    for (int k = 0; k < n_per_axis; ++k)
      for (int j = 0; j < n_per_axis; ++j)
        for (int i = 0; i < n_per_axis; ++i)
          g(i, j, k) = fn(g.coordinate(i), g.coordinate(j), g.coordinate(k));
    return g;
  }

  double half_width() const { return half_width_; }
  int n() const { return n_; }
  double spacing() const { return 2.0 * half_width_ / n_; }
  double coordinate(int i) const { return -half_width_ + (i + 0.5) * spacing(); }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double& operator()(int i, int j, int k) { return values_[index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return values_[index(i, j, k)]; }

  double max_abs() const;
  /// Largest |value| on the outermost layer of cells.
  double boundary_max() const;
  /// Midpoint-rule integral.
  double integral() const;
  double l1_norm() const;

 private:
  std::size_t index(int i, int j, int k) const {
    const auto n = static_cast<std::size_t>(n_);
    return static_cast<std::size_t>(i) + n * (static_cast<std::size_t>(j) + n * k);
  }

  double half_width_ = 1.0;
  int n_ = 0;
  std::vector<double> values_;
};

double max_abs_diff(const FreeSpaceGrid& a, const FreeSpaceGrid& b);

FieldHeader free_space_header(const FreeSpaceGrid& g, std::string name);
FreeSpaceGrid to_free_space_grid(const FieldRecord& rec);

/// Integral of 1/|x| over the unit cube centred at the origin: 3 ln(2 + sqrt 3) - pi/2.
double cube_self_integral();

/// Coefficient w with self-cell weight w h^2: C / (4 pi) from the singular
/// cell integral plus 1/24, the midpoint-rule error flux through that cell.
double self_cell_coefficient();

enum class QuadratureMethod { fft, direct };

struct NewtonianOptions {
  QuadratureMethod method = QuadratureMethod::fft;
  double self_coefficient = self_cell_coefficient();
  double decay_warn_ratio = 1e-6;
  double compat_tol = 1e-6;
};

struct NewtonianResult {
  FreeSpaceGrid potential;
  std::vector<std::string> warnings;
};

/// p(x_i) = sum_{j != i} h^3 phi_j / (4 pi |x_i - x_j|) + w h^2 phi_i,
/// the decaying solution of -lap p = phi truncated to the grid.
NewtonianResult newtonian_potential(const FreeSpaceGrid& phi, const NewtonianOptions& opts = {});

/// Mean-zero spectral solution of -lap p = phi on the periodic box of side 2R
/// sampled at the same points. The mean of phi is removed first.
FreeSpaceGrid torus_pressure(const FreeSpaceGrid& phi);

struct TorusComparison {
  double max_discrepancy = 0.0;      ///< raw, over the interior third
  double gauge_offset = 0.0;         ///< mean of (free-space - torus) over the interior third
  double aligned_discrepancy = 0.0;  ///< max |free-space - torus - offset| over the interior third
};

TorusComparison compare_with_torus(const FreeSpaceGrid& phi, const FreeSpaceGrid& torus_result,
                                   const NewtonianOptions& opts = {});

}  // namespace nst
