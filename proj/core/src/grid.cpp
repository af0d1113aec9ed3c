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

#include "nstaylor/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nstaylor/errors.hpp"

namespace nst {

std::string to_string(Dealias d) {
  return d == Dealias::two_thirds ? "two_thirds" : "exact_padding";
}

Dealias dealias_from_string(const std::string& s) {
  if (s == "two_thirds") return Dealias::two_thirds;
  if (s == "exact_padding") return Dealias::exact_padding;
  throw std::invalid_argument("unknown dealias rule '" + s + "'");
}

GridSpec GridSpec::cube(int n, Dealias d) {
  GridSpec g;
  g.nx = g.ny = g.nz = n;
  g.dealias = d;
  return g;
}

void GridSpec::validate() const {
  for (int n : {nx, ny, nz}) {
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument("grid points per axis must be even and >= 4, got " +
                                  std::to_string(n));
  }
  for (double l : {lx, ly, lz}) {
    if (!(l > 0.0) || !std::isfinite(l))
      throw std::invalid_argument("box lengths must be positive and finite");
  }
}

int GridSpec::points(Axis a) const {
  switch (a) {
    case Axis::x: return nx;
    case Axis::y: return ny;
    case Axis::z: return nz;
  }
  return 0;
}

double GridSpec::length(Axis a) const {
  switch (a) {
    case Axis::x: return lx;
    case Axis::y: return ly;
    case Axis::z: return lz;
  }
  return 0.0;
}

bool GridSpec::same_geometry(const GridSpec& o) const {
  return nx == o.nx && ny == o.ny && nz == o.nz && lx == o.lx && ly == o.ly &&
         lz == o.lz;
}

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw GridMismatchError("operands live on different grids");
}

GridField::GridField(const GridSpec& spec, double fill)
    : spec_(spec), values_(spec.size(), fill) {
  spec_.validate();
}

GridField::GridField(const GridSpec& spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
  spec_.validate();
  if (values_.size() != spec_.size())
    throw std::invalid_argument("value count does not match grid size");
}

Point GridField::coordinate(int i, int j, int k) const {
  return {i * spec_.lx / spec_.nx, j * spec_.ly / spec_.ny, k * spec_.lz / spec_.nz};
}

double GridField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double GridField::mean() const {
  if (values_.empty()) return 0.0;
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

bool GridField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

GridField& GridField::operator+=(const GridField& o) {
  require_same_grid(spec_, o.spec_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

GridField& GridField::operator-=(const GridField& o) {
  require_same_grid(spec_, o.spec_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

GridField& GridField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

GridField operator+(GridField a, const GridField& b) { return a += b; }
GridField operator-(GridField a, const GridField& b) { return a -= b; }
GridField operator*(double s, GridField a) { return a *= s; }

double max_abs_diff(const GridField& a, const GridField& b) {
  if (!a.spec().same_geometry(b.spec()))
    throw GridMismatchError("operands live on different grids");
  double m = 0.0;
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) m = std::max(m, std::abs(av[i] - bv[i]));
  return m;
}

}  // namespace nst
