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

#include "nstaylor/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "nstaylor/errors.hpp"

namespace nst {

class TrigPolyBuilder {
 public:
  static TrigPoly make(std::vector<TrigPoly::Term> sorted) { return TrigPoly(std::move(sorted)); }
};

namespace {

using Term = TrigPoly::Term;

bool by_k(const Term& a, const Term& b) { return a.k < b.k; }

// Forces exact symmetry on a sorted term list that is symmetric up to
// rounding, then drops pairs whose magnitude is below threshold.
std::vector<Term> symmetrize_and_prune(std::vector<Term> terms, double threshold) {
  auto find = [&](Wavevector k) -> Term* {
    auto it = std::lower_bound(terms.begin(), terms.end(), Term{k, {}}, by_k);
    return (it != terms.end() && it->k == k) ? &*it : nullptr;
  };
  for (auto& t : terms) {
    if (t.k.is_zero()) {
      t.c = {t.c.real(), 0.0};
    } else if (t.k.is_upper()) {
      Term* partner = find(-t.k);
      if (partner) {
        const Complex avg = 0.5 * (t.c + std::conj(partner->c));
        t.c = avg;
        partner->c = std::conj(avg);
      } else {
        throw std::logic_error("trigpoly: missing conjugate partner");
      }
    }
  }
  std::erase_if(terms, [&](const Term& t) {
    return t.c == Complex{} || std::abs(t.c) < threshold;
  });
  return terms;
}

struct WavevectorHash {
  std::size_t operator()(const Wavevector& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.x) * 73856093u;
    h ^= static_cast<std::size_t>(k.y) * 19349663u;
    h ^= static_cast<std::size_t>(k.z) * 83492791u;
    return h;
  }
};

std::string format_double(double v) {
  char buf[32];
  // Negative zero prints as 0.
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

TrigPoly TrigPoly::from_terms(std::vector<Term> terms, double hermitian_tol) {
  std::stable_sort(terms.begin(), terms.end(), by_k);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (!std::isfinite(t.c.real()) || !std::isfinite(t.c.imag()))
      throw NonFiniteError("trigpoly: non-finite coefficient");
    if (!merged.empty() && merged.back().k == t.k)
      merged.back().c += t.c;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.c == Complex{}; });

  double scale = 0.0;
  for (const auto& t : merged) scale = std::max(scale, std::abs(t.c));
  auto lookup = [&](Wavevector k) {
    auto it = std::lower_bound(merged.begin(), merged.end(), Term{k, {}}, by_k);
    return (it != merged.end() && it->k == k) ? it->c : Complex{};
  };
  for (const auto& t : merged) {
    if (std::abs(lookup(-t.k) - std::conj(t.c)) > hermitian_tol * scale)
      throw std::invalid_argument("trigpoly: coefficients are not Hermitian-symmetric");
  }
  std::vector<Term> missing;
  for (const auto& t : merged)
    if (!t.k.is_zero() && lookup(-t.k) == Complex{}) missing.push_back({-t.k, {}});
  merged.insert(merged.end(), missing.begin(), missing.end());
  std::sort(merged.begin(), merged.end(), by_k);
  return TrigPoly(symmetrize_and_prune(std::move(merged), 0.0));
}

TrigPoly TrigPoly::constant(double value) {
  if (value == 0.0) return {};
  return TrigPoly({{Wavevector{}, Complex(value, 0.0)}});
}

TrigPoly TrigPoly::cosine(Wavevector k, double amplitude) {
  if (k.is_zero()) return constant(amplitude);
  return mode_pair(k, Complex(0.5 * amplitude, 0.0));
}

TrigPoly TrigPoly::sine(Wavevector k, double amplitude) {
  if (k.is_zero()) return {};
  return mode_pair(k, Complex(0.0, -0.5 * amplitude));
}

TrigPoly TrigPoly::mode_pair(Wavevector k, Complex c) {
  if (k.is_zero()) return constant(c.real());
  if (c == Complex{}) return {};
  std::vector<Term> t{{k, c}, {-k, std::conj(c)}};
  std::sort(t.begin(), t.end(), by_k);
  return TrigPoly(std::move(t));
}

Complex TrigPoly::coeff(Wavevector k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{k, {}}, by_k);
  return (it != terms_.end() && it->k == k) ? it->c : Complex{};
}

double TrigPoly::max_magnitude() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.c));
  return m;
}

int TrigPoly::max_mode() const {
  int m = -1;
  for (const auto& t : terms_) m = std::max({m, std::abs(t.k.x), std::abs(t.k.y), std::abs(t.k.z)});
  return m;
}

int TrigPoly::max_mode(Axis a) const {
  int m = -1;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.k[a]));
  return m;
}

bool TrigPoly::is_hermitian(double tol) const {
  const double limit = tol * max_magnitude();
  for (const auto& t : terms_) {
    const Complex partner = coeff(-t.k);
    if (tol > 0.0) {
      if (std::abs(partner - std::conj(t.c)) > limit) return false;
    } else if (partner != std::conj(t.c)) {
      return false;
    }
  }
  return true;
}

double TrigPoly::l1_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.c);
  return s;
}

double TrigPoly::mean_square() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::norm(t.c);
  return s;
}

std::vector<Wavevector> TrigPoly::support() const {
  std::vector<Wavevector> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.k);
  return out;
}

TrigPoly tp_combine(std::span<const WeightedPoly> parts, double eps) {
  std::vector<Term> all;
  std::size_t total = 0;
  double scale = 0.0;
  for (const auto& p : parts) {
    total += p.poly->size();
    if (p.weight != 0.0) scale = std::max(scale, std::abs(p.weight) * p.poly->max_magnitude());
  }
  all.reserve(total);
  for (const auto& p : parts) {
    if (p.weight == 0.0) continue;
    for (const auto& t : p.poly->terms()) all.push_back({t.k, p.weight * t.c});
  }
  // Stable sort keeps summation order fixed, so c_{-k} stays the exact
  // conjugate of c_k.
  std::stable_sort(all.begin(), all.end(), by_k);
  std::vector<Term> merged;
  merged.reserve(all.size());
  for (const auto& t : all) {
    if (!merged.empty() && merged.back().k == t.k)
      merged.back().c += t.c;
    else
      merged.push_back(t);
  }
  const double threshold = eps * scale;
  std::erase_if(merged, [&](const Term& t) {
    return t.c == Complex{} || std::abs(t.c) < threshold;
  });
  return TrigPolyBuilder::make(std::move(merged));
}

TrigPoly tp_add(const TrigPoly& a, const TrigPoly& b, double eps) {
  const WeightedPoly parts[] = {{1.0, &a}, {1.0, &b}};
  return tp_combine(parts, eps);
}

TrigPoly tp_sub(const TrigPoly& a, const TrigPoly& b, double eps) {
  const WeightedPoly parts[] = {{1.0, &a}, {-1.0, &b}};
  return tp_combine(parts, eps);
}

TrigPoly tp_scale(const TrigPoly& a, double c) {
  if (c == 0.0) return {};
  std::vector<Term> out(a.terms().begin(), a.terms().end());
  for (auto& t : out) t.c *= c;
  std::erase_if(out, [](const Term& t) { return t.c == Complex{}; });
  return TrigPolyBuilder::make(std::move(out));
}

TrigPoly tp_prune(const TrigPoly& a, double threshold) {
  std::vector<Term> out(a.terms().begin(), a.terms().end());
  std::erase_if(out, [&](const Term& t) { return std::abs(t.c) < threshold; });
  return TrigPolyBuilder::make(std::move(out));
}

TrigPoly tp_mul(const TrigPoly& a, const TrigPoly& b, double eps) {
  if (a.empty() || b.empty()) return {};
  const double threshold = eps * a.max_magnitude() * b.max_magnitude();

  std::array<int, 3> lo{}, hi{};
  for (Axis ax : kAxes) {
    const int i = index_of(ax);
    lo[i] = -(a.max_mode(ax) + b.max_mode(ax));
    hi[i] = -lo[i];
  }
  const long ext_x = hi[0] - lo[0] + 1, ext_y = hi[1] - lo[1] + 1, ext_z = hi[2] - lo[2] + 1;
  const long volume = ext_x * ext_y * ext_z;

  std::vector<Term> out;
  if (volume <= (1L << 24)) {
    std::vector<Complex> acc(static_cast<std::size_t>(volume));
    auto slot = [&](Wavevector k) {
      return static_cast<std::size_t>(((k.x - lo[0]) * ext_y + (k.y - lo[1])) * ext_z +
                                      (k.z - lo[2]));
    };
    for (const auto& ta : a.terms())
      for (const auto& tb : b.terms()) acc[slot(ta.k + tb.k)] += ta.c * tb.c;
    // Slot order is lexicographic in (x, y, z).
    for (int x = lo[0]; x <= hi[0]; ++x)
      for (int y = lo[1]; y <= hi[1]; ++y)
        for (int z = lo[2]; z <= hi[2]; ++z) {
          const Complex c = acc[slot({x, y, z})];
          if (c != Complex{}) out.push_back({{x, y, z}, c});
        }
  } else {
    std::unordered_map<Wavevector, Complex, WavevectorHash> acc;
    for (const auto& ta : a.terms())
      for (const auto& tb : b.terms()) acc[ta.k + tb.k] += ta.c * tb.c;
    out.reserve(acc.size());
    for (const auto& [k, c] : acc)
      if (c != Complex{}) out.push_back({k, c});
    std::sort(out.begin(), out.end(), by_k);
  }
  // A product can cancel one of a conjugate pair to exactly zero while its
  // partner keeps a rounding residue; restore the pair before symmetrizing.
  std::vector<Term> paired;
  paired.reserve(out.size());
  for (const auto& t : out) {
    paired.push_back(t);
    auto it = std::lower_bound(out.begin(), out.end(), Term{-t.k, {}}, by_k);
    if (it == out.end() || it->k != -t.k) paired.push_back({-t.k, {}});
  }
  std::sort(paired.begin(), paired.end(), by_k);
  return TrigPolyBuilder::make(symmetrize_and_prune(std::move(paired), threshold));
}

TrigPoly tp_derivative(const TrigPoly& a, Axis axis) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    const double k = t.k[axis];
    if (k == 0.0) continue;
    out.push_back({t.k, Complex(-k * t.c.imag(), k * t.c.real())});
  }
  return TrigPolyBuilder::make(std::move(out));
}

TrigPoly tp_laplacian(const TrigPoly& a) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    if (t.k.is_zero()) continue;
    out.push_back({t.k, -static_cast<double>(t.k.norm2()) * t.c});
  }
  return TrigPolyBuilder::make(std::move(out));
}

TrigPoly tp_poisson_inverse(const TrigPoly& g, double tol) {
  const Complex mean = g.coeff(Wavevector{});
  if (std::abs(mean) > tol * g.max_magnitude())
    throw IncompatibleSourceError("Poisson source has nonzero mean " +
                                  std::to_string(std::abs(mean)));
  std::vector<Term> out;
  out.reserve(g.size());
  for (const auto& t : g.terms()) {
    if (t.k.is_zero()) continue;
    out.push_back({t.k, t.c / -static_cast<double>(t.k.norm2())});
  }
  return TrigPolyBuilder::make(std::move(out));
}

double tp_eval(const TrigPoly& a, const Point& x) {
  // Real part of c e^{ik.x}, summed over the zero mode once and each upper
  // wavevector twice.
  double s = 0.0;
  for (const auto& t : a.terms()) {
    if (t.k.is_zero()) {
      s += t.c.real();
    } else if (t.k.is_upper()) {
      const double theta = t.k.x * x[0] + t.k.y * x[1] + t.k.z * x[2];
      s += 2.0 * (t.c.real() * std::cos(theta) - t.c.imag() * std::sin(theta));
    }
  }
  return s;
}

Spectrum tp_to_spectrum(const TrigPoly& a, const GridSpec& spec) {
  spec.validate();
  Spectrum s(spec);
  for (const auto& t : a.terms()) {
    if (2 * std::abs(t.k.x) >= spec.nx || 2 * std::abs(t.k.y) >= spec.ny ||
        2 * std::abs(t.k.z) >= spec.nz)
      throw ResolutionError("trigpoly support exceeds the grid Nyquist limit");
    if (t.k.x >= 0) s.set_mode(t.k.x, t.k.y, t.k.z, t.c);
  }
  return s;
}

GridField tp_to_grid(const TrigPoly& a, const GridSpec& spec) {
  return inverse(tp_to_spectrum(a, spec));
}

TrigPoly tp_from_spectrum(const Spectrum& s, double eps) {
  const GridSpec& g = s.spec();
  const double threshold = eps * s.max_coeff();
  std::vector<Term> out;
  const int hx = s.half_nx();
  for (int iz = 0; iz < g.nz; ++iz)
    for (int iy = 0; iy < g.ny; ++iy)
      for (int ix = 0; ix < hx; ++ix) {
        const Complex c = s.coeffs()[s.index(ix, iy, iz)];
        if (c == Complex{} || std::abs(c) < threshold) continue;
        if (2 * ix == g.nx || 2 * iy == g.ny || 2 * iz == g.nz)
          throw ResolutionError("spectrum has Nyquist content");
        const Wavevector k{ix, Spectrum::signed_mode(iy, g.ny), Spectrum::signed_mode(iz, g.nz)};
        if (k.is_zero()) {
          out.push_back({k, Complex(c.real(), 0.0)});
        } else if (k.is_upper()) {
          // The kx = 0 plane stores both partners; average them.
          const Complex v = ix > 0 ? c : 0.5 * (c + std::conj(s.mode(-k.x, -k.y, -k.z)));
          out.push_back({k, v});
          out.push_back({-k, std::conj(v)});
        }
      }
  std::sort(out.begin(), out.end(), by_k);
  return TrigPolyBuilder::make(std::move(out));
}

double tp_max_norm(const TrigPoly& a) {
  if (a.empty()) return 0.0;
  auto points = [](int m) {
    if (m <= 0) return 4;
    // Two-fold oversampling while cheap, alias-free minimum beyond that.
    return m <= 16 ? 4 * m + 4 : 2 * m + 2;
  };
  GridSpec spec;
  spec.nx = points(a.max_mode(Axis::x));
  spec.ny = points(a.max_mode(Axis::y));
  spec.nz = points(a.max_mode(Axis::z));
  return tp_to_grid(a, spec).max_abs();
}

void tp_dump(std::ostream& out, const TrigPoly& a) {
  for (const auto& t : a.terms())
    out << t.k.x << ' ' << t.k.y << ' ' << t.k.z << ' ' << format_double(t.c.real()) << ' '
        << format_double(t.c.imag()) << '\n';
}

TrigPoly tp_parse(std::istream& in) {
  std::vector<Term> terms;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    Term t;
    double re = 0, im = 0;
    if (!(is >> t.k.x >> t.k.y >> t.k.z >> re >> im))
      throw std::runtime_error("trigpoly dump: malformed line " + std::to_string(lineno));
    t.c = {re, im};
    terms.push_back(t);
  }
  return TrigPoly::from_terms(std::move(terms), 0.0);
}

}  // namespace nst
