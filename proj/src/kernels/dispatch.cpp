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

#include <bit>
#include <string>

#include "vrqfi/errors.hpp"
#include "vrqfi/kernels/kernels.hpp"

namespace vrqfi::kernels {
namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::lindblad_rhs, &scalar::axpy,
                              &scalar::add_scaled};
#if defined(VRQFI_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::lindblad_rhs, &avx2::axpy, &avx2::add_scaled};
#endif
#if defined(VRQFI_HAVE_NEON_KERNELS)
constexpr KernelTable kNeon{Isa::neon, &neon::lindblad_rhs, &neon::axpy, &neon::add_scaled};
#endif

bool cpu_has_avx2() {
#if defined(VRQFI_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return has;
#else
  return false;
#endif
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
    case Isa::neon:
#if defined(VRQFI_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (available(Isa::avx2)) return Isa::avx2;
  if (available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (available(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& table(Isa isa) {
  if (!available(isa)) {
    throw Error(ErrorKind::unsupported,
                "kernel variant '" + std::string(to_string(isa)) + "' unavailable on this CPU");
  }
  switch (isa) {
#if defined(VRQFI_HAVE_AVX2_KERNELS)
    case Isa::avx2: return kAvx2;
#endif
#if defined(VRQFI_HAVE_NEON_KERNELS)
    case Isa::neon: return kNeon;
#endif
    default: return kScalar;
  }
}

std::vector<double> frequency_diagonal(int n_qubits, double theta) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<double> hz(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    hz[x] = 0.5 * theta * double(n_qubits - 2 * std::popcount(x));
  }
  return hz;
}

}  // namespace vrqfi::kernels
