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

#include "nstaylor/field_ops.hpp"

#include "nstaylor/errors.hpp"

namespace nst::field {
namespace {

void require_finite(const GridField& f) {
  if (!f.all_finite()) throw NonFiniteError("field contains non-finite values");
}

}  // namespace

GridField derivative(const GridField& f, Axis axis) {
  require_finite(f);
  return inverse(nst::derivative(forward(f), axis));
}

GridField laplacian(const GridField& f) {
  require_finite(f);
  return inverse(nst::laplacian(forward(f)));
}

GridField multiply(const GridField& f, const GridField& g) {
  require_same_grid(f.spec(), g.spec());
  require_finite(f);
  require_finite(g);
  ProductAccumulator acc(f.spec());
  acc.add(ProductAccumulator::lift(forward(f)), ProductAccumulator::lift(forward(g)));
  return inverse(acc.finish());
}

GridField poisson_solve_torus(const GridField& g, double tol_mean) {
  require_finite(g);
  if (std::abs(g.mean()) > tol_mean * g.max_abs())
    throw IncompatibleSourceError("Poisson source has nonzero mean " +
                                  std::to_string(g.mean()));
  // The mean check above is on grid values; the spectral solve re-checks on
  // coefficients, which agree to rounding.
  return inverse(poisson_solve(forward(g), 1.0));
}

GridField divergence(const VectorGridField& v) {
  require_same_grid(v.x().spec(), v.y().spec());
  require_same_grid(v.x().spec(), v.z().spec());
  for (const auto& c : v) require_finite(c);
  Spectrum sum = nst::derivative(forward(v.x()), Axis::x);
  sum += nst::derivative(forward(v.y()), Axis::y);
  sum += nst::derivative(forward(v.z()), Axis::z);
  return inverse(sum);
}

VectorGridField gradient(const GridField& f) {
  require_finite(f);
  const Spectrum s = forward(f);
  return make_vec3(inverse(nst::derivative(s, Axis::x)), inverse(nst::derivative(s, Axis::y)),
                   inverse(nst::derivative(s, Axis::z)));
}

}  // namespace nst::field
