// Copyright 2026 The vrqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AArch64 NEON kernels; one float64x2_t holds one complex value.

#include <arm_neon.h>

#include "vrqfi/kernels/kernels.hpp"

namespace vrqfi::kernels::neon {
namespace {

inline float64x2_t load1(const cplx* p) { return vld1q_f64(reinterpret_cast<const double*>(p)); }
inline void store1(cplx* p, float64x2_t v) { vst1q_f64(reinterpret_cast<double*>(p), v); }

}  // namespace

void lindblad_rhs(const cplx* rho, cplx* out, const double* hz, int n_qubits, double kappa) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const float64x2_t half_kappa = vdupq_n_f64(0.5 * kappa);
  const float64x2_t minus_n = vdupq_n_f64(-double(n_qubits));
  const double sign_init[2] = {1.0, -1.0};
  const float64x2_t sign = vld1q_f64(sign_init);

  for (std::size_t x = 0; x < dim; ++x) {
    const cplx* row = rho + x * dim;
    cplx* out_row = out + x * dim;
    for (std::size_t y = 0; y < dim; ++y) {
      const float64x2_t r = load1(row + y);
      float64x2_t flipped = vdupq_n_f64(0.0);
      for (int j = 0; j < n_qubits; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        flipped = vaddq_f64(flipped, load1(rho + (x ^ bit) * dim + (y ^ bit)));
      }
      const float64x2_t w = vmulq_n_f64(sign, hz[x] - hz[y]);  // (w, -w)
      const float64x2_t swapped = vextq_f64(r, r, 1);           // (im, re)
      const float64x2_t unitary = vmulq_f64(swapped, w);
      const float64x2_t dissipator = vfmaq_f64(flipped, minus_n, r);
      store1(out_row + y, vfmaq_f64(unitary, half_kappa, dissipator));
    }
  }
}

void axpy(std::size_t n, double alpha, const cplx* x, cplx* y) {
  const float64x2_t a = vdupq_n_f64(alpha);
  for (std::size_t i = 0; i < n; ++i) store1(y + i, vfmaq_f64(load1(y + i), a, load1(x + i)));
}

void add_scaled(std::size_t n, const cplx* x, double alpha, const cplx* y, cplx* out) {
  const float64x2_t a = vdupq_n_f64(alpha);
  for (std::size_t i = 0; i < n; ++i) store1(out + i, vfmaq_f64(load1(x + i), a, load1(y + i)));
}

}  // namespace vrqfi::kernels::neon
