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

#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace nst::detail {
namespace {

struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plans] : plans_) {
      fftw_destroy_plan(plans.r2c);
      fftw_destroy_plan(plans.c2r);
    }
  }

  const PlanPair& get(int nx, int ny, int nz) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(nx, ny, nz);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    // Planning scratch; plans are executed later through the new-array API.
    const std::size_t real_n = static_cast<std::size_t>(nx) * ny * nz;
    const std::size_t cplx_n = static_cast<std::size_t>(nz) * ny * (nx / 2 + 1);
    std::vector<double> r(real_n);
    std::vector<std::complex<double>> c(cplx_n);
    auto* cp = reinterpret_cast<fftw_complex*>(c.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.r2c = fftw_plan_dft_r2c_3d(nz, ny, nx, r.data(), cp, flags);
    p.c2r = fftw_plan_dft_c2r_3d(nz, ny, nx, cp, r.data(), flags);
    return plans_.emplace(key, p).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void fft_r2c(int nx, int ny, int nz, const double* in, std::complex<double>* out) {
  const auto& p = cache().get(nx, ny, nz);
  // Out-of-place r2c leaves its input intact.
  fftw_execute_dft_r2c(p.r2c, const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void fft_c2r(int nx, int ny, int nz, const std::complex<double>* in, double* out) {
  const auto& p = cache().get(nx, ny, nz);
  const std::size_t cplx_n = static_cast<std::size_t>(nz) * ny * (nx / 2 + 1);
  std::vector<std::complex<double>> scratch(in, in + cplx_n);
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(scratch.data()), out);
}

}  // namespace nst::detail
