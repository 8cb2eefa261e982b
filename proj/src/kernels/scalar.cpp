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

// Reference kernels. Written for clarity; the SIMD variants are checked
// against these.

#include "vrqfi/kernels/kernels.hpp"

namespace vrqfi::kernels::scalar {

void lindblad_rhs(const cplx* rho, cplx* out, const double* hz, int n_qubits, double kappa) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double half_kappa = 0.5 * kappa;
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      const cplx r = rho[x * dim + y];
      cplx flipped{};
      for (int j = 0; j < n_qubits; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        flipped += rho[(x ^ bit) * dim + (y ^ bit)];
      }
      const double w = hz[x] - hz[y];
      const cplx unitary{w * r.imag(), -w * r.real()};  // -i w r
      out[x * dim + y] = unitary + half_kappa * (flipped - double(n_qubits) * r);
    }
  }
}

void axpy(std::size_t n, double alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void add_scaled(std::size_t n, const cplx* x, double alpha, const cplx* y, cplx* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + alpha * y[i];
}

}  // namespace vrqfi::kernels::scalar
