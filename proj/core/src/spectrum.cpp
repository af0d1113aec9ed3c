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

#include "nstaylor/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "nstaylor/errors.hpp"

namespace nst {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int wrap_index(int m, int n) { return m >= 0 ? m : m + n; }

// Largest |mode| kept by the two-thirds rule on an n-point axis.
int two_thirds_cutoff(int n) { return (n - 1) / 3; }

}  // namespace

Spectrum::Spectrum(const GridSpec& spec) : spec_(spec), coeffs_(spec.spectral_size()) {
  spec_.validate();
}

Spectrum::Spectrum(const GridSpec& spec, std::vector<Complex> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
  spec_.validate();
  if (coeffs_.size() != spec_.spectral_size())
    throw std::invalid_argument("coefficient count does not match grid");
}

Complex Spectrum::mode(int mx, int my, int mz) const {
  if (mx < 0) return std::conj(mode(-mx, -my, -mz));
  if (mx > spec_.nx / 2 || std::abs(my) > spec_.ny / 2 || std::abs(mz) > spec_.nz / 2)
    return {};
  return coeffs_[index(mx, wrap_index(my, spec_.ny), wrap_index(mz, spec_.nz))];
}

void Spectrum::set_mode(int mx, int my, int mz, Complex value) {
  if (mx < 0 || mx > spec_.nx / 2 || std::abs(my) > spec_.ny / 2 ||
      std::abs(mz) > spec_.nz / 2)
    throw ResolutionError("mode outside the stored half spectrum");
  coeffs_[index(mx, wrap_index(my, spec_.ny), wrap_index(mz, spec_.nz))] = value;
}

double Spectrum::max_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

int Spectrum::max_mode() const {
  int best = -1;
  const int hx = half_nx();
  for (int iz = 0; iz < spec_.nz; ++iz)
    for (int iy = 0; iy < spec_.ny; ++iy)
      for (int ix = 0; ix < hx; ++ix) {
        if (coeffs_[index(ix, iy, iz)] == Complex{}) continue;
        best = std::max({best, ix, std::abs(signed_mode(iy, spec_.ny)),
                         std::abs(signed_mode(iz, spec_.nz))});
      }
  return best;
}

double Spectrum::mean_square() const {
  double s = 0.0;
  const int hx = half_nx();
  for (int iz = 0; iz < spec_.nz; ++iz)
    for (int iy = 0; iy < spec_.ny; ++iy)
      for (int ix = 0; ix < hx; ++ix) {
        const double w = (ix == 0 || 2 * ix == spec_.nx) ? 1.0 : 2.0;
        s += w * std::norm(coeffs_[index(ix, iy, iz)]);
      }
  return s;
}

std::size_t Spectrum::prune(double threshold) {
  if (!(threshold > 0.0)) return 0;
  std::size_t n = 0;
  for (auto& c : coeffs_) {
    if (c != Complex{} && std::abs(c) < threshold) {
      c = {};
      ++n;
    }
  }
  return n;
}

std::size_t Spectrum::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c != Complex{}; }));
}

Spectrum& Spectrum::operator+=(const Spectrum& o) {
  require_same_grid(spec_, o.spec_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& o) {
  require_same_grid(spec_, o.spec_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Spectrum& Spectrum::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

double Spectrum::evaluate(const Point& x) const {
  const int hx = half_nx();
  auto phases = [](int n, double coord, double len, bool half) {
    const int count = half ? n / 2 + 1 : n;
    std::vector<Complex> e(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      const int m = half ? i : signed_mode(i, n);
      e[static_cast<std::size_t>(i)] = std::polar(1.0, kTwoPi * m * coord / len);
    }
    return e;
  };
  const auto ex = phases(spec_.nx, x[0], spec_.lx, true);
  const auto ey = phases(spec_.ny, x[1], spec_.ly, false);
  const auto ez = phases(spec_.nz, x[2], spec_.lz, false);

  double sum = 0.0;
  for (int iz = 0; iz < spec_.nz; ++iz)
    for (int iy = 0; iy < spec_.ny; ++iy) {
      const Complex eyz = ey[static_cast<std::size_t>(iy)] * ez[static_cast<std::size_t>(iz)];
      for (int ix = 0; ix < hx; ++ix) {
        const Complex c = coeffs_[index(ix, iy, iz)];
        if (c == Complex{}) continue;
        const double w = (ix == 0 || 2 * ix == spec_.nx) ? 1.0 : 2.0;
        sum += w * (c * ex[static_cast<std::size_t>(ix)] * eyz).real();
      }
    }
  return sum;
}

Spectrum forward(const GridField& f) {
  const auto& g = f.spec();
  Spectrum s(g);
  detail::fft_r2c(g.nx, g.ny, g.nz, f.values().data(), s.coeffs().data());
  s *= 1.0 / static_cast<double>(g.size());
  return s;
}

GridField inverse(const Spectrum& s) {
  const auto& g = s.spec();
  GridField f(g);
  detail::fft_c2r(g.nx, g.ny, g.nz, s.coeffs().data(), f.values().data());
  return f;
}

Spectrum derivative(const Spectrum& s, Axis axis) {
  const auto& g = s.spec();
  Spectrum out(g);
  const int hx = s.half_nx();
  const int n_axis = g.points(axis);
  const double dk = kTwoPi / g.length(axis);
  for (int iz = 0; iz < g.nz; ++iz)
    for (int iy = 0; iy < g.ny; ++iy)
      for (int ix = 0; ix < hx; ++ix) {
        const int i_axis = axis == Axis::x ? ix : axis == Axis::y ? iy : iz;
        if (2 * i_axis == n_axis) continue;  // Nyquist
        const int m = axis == Axis::x ? ix : Spectrum::signed_mode(i_axis, n_axis);
        const std::size_t idx = s.index(ix, iy, iz);
        out.coeffs()[idx] = s.coeffs()[idx] * Complex(0.0, m * dk);
      }
  return out;
}

Spectrum laplacian(const Spectrum& s) {
  const auto& g = s.spec();
  Spectrum out(g);
  const int hx = s.half_nx();
  const double dkx = kTwoPi / g.lx, dky = kTwoPi / g.ly, dkz = kTwoPi / g.lz;
  for (int iz = 0; iz < g.nz; ++iz) {
    const double kz = Spectrum::signed_mode(iz, g.nz) * dkz;
    for (int iy = 0; iy < g.ny; ++iy) {
      const double ky = Spectrum::signed_mode(iy, g.ny) * dky;
      for (int ix = 0; ix < hx; ++ix) {
        const double kx = ix * dkx;
        const std::size_t idx = s.index(ix, iy, iz);
        out.coeffs()[idx] = -(kx * kx + ky * ky + kz * kz) * s.coeffs()[idx];
      }
    }
  }
  return out;
}

double max_norm(const Spectrum& s) { return inverse(s).max_abs(); }

Spectrum poisson_solve(const Spectrum& g, double tol_mean) {
  const auto& spec = g.spec();
  const double scale = max_norm(g);
  if (std::abs(g.mean()) > tol_mean * scale)
    throw IncompatibleSourceError("Poisson source has nonzero mean " +
                                  std::to_string(std::abs(g.mean())));
  Spectrum p(spec);
  const int hx = g.half_nx();
  const double dkx = kTwoPi / spec.lx, dky = kTwoPi / spec.ly, dkz = kTwoPi / spec.lz;
  for (int iz = 0; iz < spec.nz; ++iz) {
    const double kz = Spectrum::signed_mode(iz, spec.nz) * dkz;
    for (int iy = 0; iy < spec.ny; ++iy) {
      const double ky = Spectrum::signed_mode(iy, spec.ny) * dky;
      for (int ix = 0; ix < hx; ++ix) {
        if (ix == 0 && iy == 0 && iz == 0) continue;
        const double kx = ix * dkx;
        const std::size_t idx = g.index(ix, iy, iz);
        p.coeffs()[idx] = -g.coeffs()[idx] / (kx * kx + ky * ky + kz * kz);
      }
    }
  }
  return p;
}

Spectrum combine(std::span<const WeightedSpectrum> terms, double eps) {
  if (terms.empty()) throw std::invalid_argument("combine needs at least one term");
  const GridSpec& spec = terms.front().field->spec();
  Spectrum out(spec);
  double scale = 0.0;
  for (const auto& t : terms) {
    require_same_grid(spec, t.field->spec());
    if (t.weight == 0.0) continue;
    scale = std::max(scale, std::abs(t.weight) * t.field->max_coeff());
    auto src = t.field->coeffs();
    auto dst = out.coeffs();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += t.weight * src[i];
  }
  out.prune(eps * scale);
  return out;
}

std::array<int, 3> product_grid_shape(const GridSpec& spec) {
  if (spec.dealias == Dealias::exact_padding)
    return {3 * spec.nx / 2, 3 * spec.ny / 2, 3 * spec.nz / 2};
  return {spec.nx, spec.ny, spec.nz};
}

ProductAccumulator::ProductAccumulator(const GridSpec& spec) : spec_(spec) {
  spec_.validate();
  const auto shape = product_grid_shape(spec_);
  sum_.assign(static_cast<std::size_t>(shape[0]) * shape[1] * shape[2], 0.0);
}

ProductAccumulator::Lifted ProductAccumulator::lift(const Spectrum& s) {
  const GridSpec& g = s.spec();
  const auto [mx, my, mz] = product_grid_shape(g);
  const int hx_src = s.half_nx();
  const int hx_dst = mx / 2 + 1;
  std::vector<Complex> padded(static_cast<std::size_t>(mz) * my * hx_dst);

  const bool exact = g.dealias == Dealias::exact_padding;
  const int kx_max = exact ? g.nx / 2 - 1 : two_thirds_cutoff(g.nx);
  const int ky_max = exact ? g.ny / 2 - 1 : two_thirds_cutoff(g.ny);
  const int kz_max = exact ? g.nz / 2 - 1 : two_thirds_cutoff(g.nz);

  for (int iz = 0; iz < g.nz; ++iz) {
    const int kz = Spectrum::signed_mode(iz, g.nz);
    if (std::abs(kz) > kz_max) continue;
    for (int iy = 0; iy < g.ny; ++iy) {
      const int ky = Spectrum::signed_mode(iy, g.ny);
      if (std::abs(ky) > ky_max) continue;
      for (int ix = 0; ix < std::min(hx_src, kx_max + 1); ++ix) {
        const std::size_t dst = static_cast<std::size_t>(ix) +
                                static_cast<std::size_t>(hx_dst) *
                                    (static_cast<std::size_t>(wrap_index(ky, my)) +
                                     static_cast<std::size_t>(my) * wrap_index(kz, mz));
        padded[dst] = s.coeffs()[s.index(ix, iy, iz)];
      }
    }
  }

  Lifted out;
  out.values.resize(static_cast<std::size_t>(mx) * my * mz);
  detail::fft_c2r(mx, my, mz, padded.data(), out.values.data());
  for (double v : out.values) out.max_abs = std::max(out.max_abs, std::abs(v));
  return out;
}

void ProductAccumulator::add(const Lifted& a, const Lifted& b, double weight) {
  if (a.values.size() != sum_.size() || b.values.size() != sum_.size())
    throw GridMismatchError("lifted factor does not match the product grid");
  if (weight == 0.0) return;
  for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] += weight * a.values[i] * b.values[i];
  scale_ += std::abs(weight) * a.max_abs * b.max_abs;
}

Spectrum ProductAccumulator::finish(double eps) const {
  const auto [mx, my, mz] = product_grid_shape(spec_);
  const int hx_big = mx / 2 + 1;
  std::vector<Complex> big(static_cast<std::size_t>(mz) * my * hx_big);
  detail::fft_r2c(mx, my, mz, sum_.data(), big.data());
  const double norm = 1.0 / static_cast<double>(sum_.size());

  const bool exact = spec_.dealias == Dealias::exact_padding;
  const int kx_max = exact ? spec_.nx / 2 - 1 : two_thirds_cutoff(spec_.nx);
  const int ky_max = exact ? spec_.ny / 2 - 1 : two_thirds_cutoff(spec_.ny);
  const int kz_max = exact ? spec_.nz / 2 - 1 : two_thirds_cutoff(spec_.nz);

  Spectrum out(spec_);
  for (int iz = 0; iz < spec_.nz; ++iz) {
    const int kz = Spectrum::signed_mode(iz, spec_.nz);
    if (std::abs(kz) > kz_max) continue;
    for (int iy = 0; iy < spec_.ny; ++iy) {
      const int ky = Spectrum::signed_mode(iy, spec_.ny);
      if (std::abs(ky) > ky_max) continue;
      for (int ix = 0; ix <= kx_max; ++ix) {
        const std::size_t src = static_cast<std::size_t>(ix) +
                                static_cast<std::size_t>(hx_big) *
                                    (static_cast<std::size_t>(wrap_index(ky, my)) +
                                     static_cast<std::size_t>(my) * wrap_index(kz, mz));
        out.coeffs()[out.index(ix, iy, iz)] = big[src] * norm;
      }
    }
  }
  out.prune(eps * scale_);
  return out;
}

}  // namespace nst
