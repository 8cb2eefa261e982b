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

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

// Inner loops of the master-equation integrator. Every kernel has a scalar
// reference implementation; SIMD variants (AVX2+FMA on x86-64, NEON on
// AArch64) are compiled in when the target supports them and picked at run
// time. Matrices are dense, row-major, interleaved complex doubles.
namespace vrqfi::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

// Right-hand side of the N-qubit master equation
//   out = -i sum_j [h_j, rho] + (kappa/2) (sum_j X_j rho X_j - N rho),
// where the frequency term is diagonal with entries hz[x] and X_j flips bit j:
//   out[x][y] = -i (hz[x] - hz[y]) rho[x][y]
//             + (kappa/2) (sum_j rho[x^2^j][y^2^j] - N rho[x][y]).
// rho and out are 2^N x 2^N and must not alias.
using LindbladRhsFn = void (*)(const cplx* rho, cplx* out, const double* hz, int n_qubits,
                               double kappa);

// y += alpha * x over n complex entries.
using AxpyFn = void (*)(std::size_t n, double alpha, const cplx* x, cplx* y);

// out = x + alpha * y over n complex entries; out may alias x.
using AddScaledFn = void (*)(std::size_t n, const cplx* x, double alpha, const cplx* y,
                             cplx* out);

struct KernelTable {
  Isa isa;
  LindbladRhsFn lindblad_rhs;
  AxpyFn axpy;
  AddScaledFn add_scaled;
};

// True when the variant is compiled in and the running CPU supports it.
bool available(Isa isa);

// Widest available variant.
Isa best_isa();

// Throws vrqfi::Error{unsupported} for an unavailable variant.
const KernelTable& table(Isa isa);

std::vector<Isa> available_isas();

// Diagonal of the frequency generator (theta/2) sum_j sigma_z^(j):
// hz[x] = (theta/2) (N - 2 popcount(x)).
std::vector<double> frequency_diagonal(int n_qubits, double theta);

namespace scalar {
void lindblad_rhs(const cplx* rho, cplx* out, const double* hz, int n_qubits, double kappa);
void axpy(std::size_t n, double alpha, const cplx* x, cplx* y);
void add_scaled(std::size_t n, const cplx* x, double alpha, const cplx* y, cplx* out);
}  // namespace scalar

#if defined(VRQFI_HAVE_AVX2_KERNELS)
namespace avx2 {
void lindblad_rhs(const cplx* rho, cplx* out, const double* hz, int n_qubits, double kappa);
void axpy(std::size_t n, double alpha, const cplx* x, cplx* y);
void add_scaled(std::size_t n, const cplx* x, double alpha, const cplx* y, cplx* out);
}  // namespace avx2
#endif

#if defined(VRQFI_HAVE_NEON_KERNELS)
namespace neon {
void lindblad_rhs(const cplx* rho, cplx* out, const double* hz, int n_qubits, double kappa);
void axpy(std::size_t n, double alpha, const cplx* x, cplx* y);
void add_scaled(std::size_t n, const cplx* x, double alpha, const cplx* y, cplx* out);
}  // namespace neon
#endif

}  // namespace vrqfi::kernels
