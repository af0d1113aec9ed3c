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

#include "nstaylor/backends.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace nst {

void TrigPolyBackend::Products::add(const Lifted& a, const Lifted& b, double weight) {
  if (weight == 0.0 || a.empty() || b.empty()) return;
  const TrigPoly prod = tp_mul(a, b, 0.0);
  const WeightedPoly parts[] = {{1.0, &sum_}, {weight, &prod}};
  sum_ = tp_combine(parts, 0.0);
  scale_ += std::abs(weight) * a.max_magnitude() * b.max_magnitude();
}

TrigPoly TrigPolyBackend::Products::finish(double eps) const {
  return tp_prune(sum_, eps * scale_);
}

TrigPoly TrigPolyBackend::combine(std::span<const Weighted<Field>> terms, double eps) const {
  std::vector<WeightedPoly> parts;
  parts.reserve(terms.size());
  for (const auto& t : terms) parts.push_back({t.weight, t.field});
  return tp_combine(parts, eps);
}

TrigPoly TrigPolyBackend::poisson(const Field& rhs) const {
  return tp_poisson_inverse(rhs, std::max(tol_mean_, eps_prune_));
}

GridBackend::GridBackend(const GridSpec& spec, double eps_prune, double tol_mean)
    : spec_(spec), eps_prune_(eps_prune), tol_mean_(tol_mean) {
  spec_.validate();
}

Spectrum GridBackend::combine(std::span<const Weighted<Field>> terms, double eps) const {
  if (terms.empty()) return zero();
  std::vector<WeightedSpectrum> parts;
  parts.reserve(terms.size());
  for (const auto& t : terms) parts.push_back({t.weight, t.field});
  return nst::combine(parts, eps);
}

Spectrum GridBackend::scale(const Field& f, double s) const {
  Spectrum out = f;
  out *= s;
  return out;
}

}  // namespace nst
