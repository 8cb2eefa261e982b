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

// AVX2+FMA kernels. This file is compiled with -mavx2 -mfma and must only
// be entered after a runtime CPU check (see dispatch.cpp).

#include <immintrin.h>

#include <vector>

#include "vrqfi/kernels/kernels.hpp"

namespace vrqfi::kernels::avx2 {
namespace {

// One __m256d holds two interleaved complex doubles: (re0, im0, re1, im1).
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

}  // namespace

void lindblad_rhs(const cplx* rho, cplx* out, const double* hz, int n_qubits, double kappa) {
  const std::size_t dim = std::size_t{1} << n_qubits;

  // hz laid out as (hz[y], -hz[y]) so -i (hz[x] - hz[y]) z becomes
  // swap(z) * (w, -w) with one subtract per pair.
  std::vector<double> signed_hz(2 * dim);
  for (std::size_t y = 0; y < dim; ++y) {
    signed_hz[2 * y] = hz[y];
    signed_hz[2 * y + 1] = -hz[y];
  }
  const __m256d half_kappa = _mm256_set1_pd(0.5 * kappa);
  const __m256d minus_n = _mm256_set1_pd(-double(n_qubits));

  for (std::size_t x = 0; x < dim; ++x) {
    const cplx* row = rho + x * dim;
    cplx* out_row = out + x * dim;
    const __m256d hx = _mm256_set_pd(-hz[x], hz[x], -hz[x], hz[x]);
    for (std::size_t y = 0; y < dim; y += 2) {
      const __m256d r = load2(row + y);

      // Bit 0 flips y within the loaded pair: swap the 128-bit halves.
      __m256d flipped = _mm256_permute2f128_pd(load2(rho + (x ^ 1) * dim + y),
                                               load2(rho + (x ^ 1) * dim + y), 0x01);
      for (int j = 1; j < n_qubits; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        flipped = _mm256_add_pd(flipped, load2(rho + (x ^ bit) * dim + (y ^ bit)));
      }

      const __m256d w = _mm256_sub_pd(hx, _mm256_loadu_pd(signed_hz.data() + 2 * y));
      const __m256d swapped = _mm256_permute_pd(r, 0b0101);  // (im, re) per complex
      const __m256d unitary = _mm256_mul_pd(swapped, w);
      const __m256d dissipator = _mm256_fmadd_pd(minus_n, r, flipped);
      store2(out_row + y, _mm256_fmadd_pd(half_kappa, dissipator, unitary));
    }
  }
}

void axpy(std::size_t n, double alpha, const cplx* x, cplx* y) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(y + i, _mm256_fmadd_pd(a, load2(x + i), load2(y + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void add_scaled(std::size_t n, const cplx* x, double alpha, const cplx* y, cplx* out) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(out + i, _mm256_fmadd_pd(a, load2(y + i), load2(x + i)));
  for (; i < n; ++i) out[i] = x[i] + alpha * y[i];
}

}  // namespace vrqfi::kernels::avx2
