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

#include "nstaylor/grid.hpp"
#include "nstaylor/spectrum.hpp"

namespace nst::field {

/// Spectral derivative of sampled data along one axis.
GridField derivative(const GridField& f, Axis axis);

GridField laplacian(const GridField& f);

/// Pointwise product with dealiasing according to f.spec().dealias.
/// Throws GridMismatchError when the grids differ.
GridField multiply(const GridField& f, const GridField& g);

/// Solves lap(p) = g on the torus with mean(p) = 0. Throws
/// IncompatibleSourceError when |mean(g)| > tol_mean * max|g|.
GridField poisson_solve_torus(const GridField& g, double tol_mean = 1e-10);

GridField divergence(const VectorGridField& v);
VectorGridField gradient(const GridField& f);

}  // namespace nst::field
