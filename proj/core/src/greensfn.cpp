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

#include "nstaylor/greensfn.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"
#include "nstaylor/errors.hpp"
#include "nstaylor/field_ops.hpp"

namespace nst {
namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(const FreeSpaceGrid& g) {
  for (double v : g.values())
    if (!std::isfinite(v)) throw NonFiniteError("non-finite value in free-space grid");
}

/// Interior third: |x| <= R/3 along every axis.
bool interior(const FreeSpaceGrid& g, int i) { return std::abs(g.coordinate(i)) <= g.half_width() / 3.0; }

FreeSpaceGrid potential_direct(const FreeSpaceGrid& phi, double self) {
  const int n = phi.n();
  const double h = phi.spacing();
  const double w = h * h / (4.0 * kPi);
  FreeSpaceGrid out(phi.half_width(), n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int c = 0; c < n; ++c)
          for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a) {
              const double v = phi(a, b, c);
              if (v == 0.0) continue;
              const int di = i - a;
              const int dj = j - b;
              const int dk = k - c;
              if (di == 0 && dj == 0 && dk == 0) {
                acc += self * h * h * v;
              } else {
                acc += w * v / std::sqrt(static_cast<double>(di * di + dj * dj + dk * dk));
              }
            }
        out(i, j, k) = acc;
      }
  return out;
}

/// Linear convolution by zero padding to (2n)^3.
FreeSpaceGrid potential_fft(const FreeSpaceGrid& phi, double self) {
  const int n = phi.n();
  const int m = 2 * n;
  const double h = phi.spacing();
  const auto mm = static_cast<std::size_t>(m);
  const std::size_t real_size = mm * mm * mm;
  const std::size_t spec_size = mm * mm * (mm / 2 + 1);
  const auto at = [&](int i, int j, int k) {
    return static_cast<std::size_t>(i) + mm * (static_cast<std::size_t>(j) + mm * k);
  };

  std::vector<double> kernel(real_size, 0.0);
  const double w = h * h / (4.0 * kPi);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) {
        const int di = i < n ? i : i - m;
        const int dj = j < n ? j : j - m;
        const int dk = k < n ? k : k - m;
        const int r2 = di * di + dj * dj + dk * dk;
        kernel[at(i, j, k)] = r2 == 0 ? self * h * h : w / std::sqrt(static_cast<double>(r2));
      }

  std::vector<double> source(real_size, 0.0);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) source[at(i, j, k)] = phi(i, j, k);

  std::vector<std::complex<double>> ks(spec_size);
  std::vector<std::complex<double>> ss(spec_size);
  detail::fft_r2c(m, m, m, kernel.data(), ks.data());
  detail::fft_r2c(m, m, m, source.data(), ss.data());
  const double norm = 1.0 / static_cast<double>(real_size);
  for (std::size_t q = 0; q < spec_size; ++q) ss[q] *= ks[q] * norm;
  detail::fft_c2r(m, m, m, ss.data(), source.data());

  FreeSpaceGrid out(phi.half_width(), n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) out(i, j, k) = source[at(i, j, k)];
  return out;
}

}  // namespace

FreeSpaceGrid::FreeSpaceGrid(double half_width, int n_per_axis, double fill)
    : FreeSpaceGrid(half_width, n_per_axis,
                    std::vector<double>(static_cast<std::size_t>(std::max(n_per_axis, 0)) *
                                            std::max(n_per_axis, 0) * std::max(n_per_axis, 0),
                                        fill)) {}

FreeSpaceGrid::FreeSpaceGrid(double half_width, int n_per_axis, std::vector<double> values)
    : half_width_(half_width), n_(n_per_axis), values_(std::move(values)) {
  if (!(half_width > 0.0)) throw std::invalid_argument("half-width must be > 0");
  if (n_per_axis < 2) throw std::invalid_argument("need at least 2 points per axis");
  const auto n = static_cast<std::size_t>(n_per_axis);
  if (values_.size() != n * n * n)
    throw GridMismatchError("free-space grid expects " + std::to_string(n * n * n) +
                            " values, got " + std::to_string(values_.size()));
}

double FreeSpaceGrid::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double FreeSpaceGrid::boundary_max() const {
  double m = 0.0;
  for (int k = 0; k < n_; ++k)
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i) {
        const bool edge = i == 0 || j == 0 || k == 0 || i == n_ - 1 || j == n_ - 1 || k == n_ - 1;
        if (edge) m = std::max(m, std::abs((*this)(i, j, k)));
      }
  return m;
}

double FreeSpaceGrid::integral() const {
  double s = 0.0;
  for (double v : values_) s += v;
  const double h = spacing();
  return s * h * h * h;
}

double FreeSpaceGrid::l1_norm() const {
  double s = 0.0;
  for (double v : values_) s += std::abs(v);
  const double h = spacing();
  return s * h * h * h;
}

double max_abs_diff(const FreeSpaceGrid& a, const FreeSpaceGrid& b) {
  if (a.n() != b.n() || a.half_width() != b.half_width())
    throw GridMismatchError("free-space grids differ");
  double m = 0.0;
  for (std::size_t q = 0; q < a.values().size(); ++q)
    m = std::max(m, std::abs(a.values()[q] - b.values()[q]));
  return m;
}

FieldHeader free_space_header(const FreeSpaceGrid& g, std::string name) {
  FieldHeader h;
  h.name = std::move(name);
  h.dims = {g.n(), g.n(), g.n()};
  const double side = 2.0 * g.half_width();
  h.box = {side, side, side};
  h.domain = "free-space";
  const double o = g.coordinate(0);
  h.origin = std::array<double, 3>{o, o, o};
  return h;
}

FreeSpaceGrid to_free_space_grid(const FieldRecord& rec) {
  const auto& h = rec.header;
  if (h.domain != "free-space") throw std::invalid_argument("record is not a free-space field");
  if (h.dims[0] != h.dims[1] || h.dims[0] != h.dims[2] || h.box[0] != h.box[1] ||
      h.box[0] != h.box[2])
    throw std::invalid_argument("free-space field must be a cube");
  return FreeSpaceGrid(h.box[0] / 2.0, h.dims[0], rec.values);
}

double cube_self_integral() { return 3.0 * std::log(2.0 + std::sqrt(3.0)) - kPi / 2.0; }

double self_cell_coefficient() { return cube_self_integral() / (4.0 * kPi) + 1.0 / 24.0; }

NewtonianResult newtonian_potential(const FreeSpaceGrid& phi, const NewtonianOptions& opts) {
  require_finite(phi);
  NewtonianResult out;
  const double peak = phi.max_abs();
  if (peak > 0.0 && phi.boundary_max() > opts.decay_warn_ratio * peak)
    out.warnings.push_back("source does not decay at the boundary: boundary max " +
                           std::to_string(phi.boundary_max()) + " vs interior max " +
                           std::to_string(peak));
  const double l1 = phi.l1_norm();
  if (l1 > 0.0 && std::abs(phi.integral()) > opts.compat_tol * l1)
    out.warnings.push_back("source has nonzero total integral " + std::to_string(phi.integral()) +
                           "; the potential decays like 1/r");
  out.potential = opts.method == QuadratureMethod::direct
                      ? potential_direct(phi, opts.self_coefficient)
                      : potential_fft(phi, opts.self_coefficient);
  return out;
}

FreeSpaceGrid torus_pressure(const FreeSpaceGrid& phi) {
  require_finite(phi);
  if (phi.n() % 2 != 0 || phi.n() < 4)
    throw std::invalid_argument("torus solve needs an even point count >= 4");
  GridSpec spec = GridSpec::cube(phi.n());
  spec.lx = spec.ly = spec.lz = 2.0 * phi.half_width();
  GridField g(spec, std::vector<double>(phi.values().begin(), phi.values().end()));
  const double mean = g.mean();
  for (double& v : g.values()) v = mean - v;
  const GridField p = field::poisson_solve_torus(g, 1.0);
  return FreeSpaceGrid(phi.half_width(), phi.n(),
                       std::vector<double>(p.values().begin(), p.values().end()));
}

TorusComparison compare_with_torus(const FreeSpaceGrid& phi, const FreeSpaceGrid& torus_result,
                                   const NewtonianOptions& opts) {
  const FreeSpaceGrid free = newtonian_potential(phi, opts).potential;
  if (free.n() != torus_result.n() || free.half_width() != torus_result.half_width())
    throw GridMismatchError("torus result does not match the source grid");
  const int n = phi.n();
  TorusComparison out;
  double sum = 0.0;
  long count = 0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        if (!interior(phi, i) || !interior(phi, j) || !interior(phi, k)) continue;
        const double d = free(i, j, k) - torus_result(i, j, k);
        out.max_discrepancy = std::max(out.max_discrepancy, std::abs(d));
        sum += d;
        ++count;
      }
  if (count == 0) return out;
  out.gauge_offset = sum / static_cast<double>(count);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        if (!interior(phi, i) || !interior(phi, j) || !interior(phi, k)) continue;
        const double d = free(i, j, k) - torus_result(i, j, k) - out.gauge_offset;
        out.aligned_discrepancy = std::max(out.aligned_discrepancy, std::abs(d));
      }
  return out;
}

}  // namespace nst
