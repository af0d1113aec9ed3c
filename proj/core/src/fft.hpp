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

namespace nst::detail {

/// Real <-> half-complex 3D transforms for arrays of shape (nz, ny, nx) with x
/// contiguous. Plans are built once per shape with FFTW_ESTIMATE, so results
/// are reproducible run to run. Neither call normalizes.
void fft_r2c(int nx, int ny, int nz, const double* in, std::complex<double>* out);

/// The input is copied before the transform; it is never modified.
void fft_c2r(int nx, int ny, int nz, const std::complex<double>* in, double* out);

}  // namespace nst::detail
