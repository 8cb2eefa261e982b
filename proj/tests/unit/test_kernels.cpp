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

#include <doctest.h>

#include "helpers.hpp"
#include "vrqfi/kernels/kernels.hpp"

using namespace vrqfi;
using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

namespace {

RowMajor random_matrix(Eigen::Index n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  RowMajor m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = cplx(normal(gen), normal(gen));
  return m;
}

}  // namespace

TEST_CASE("scalar lindblad kernel matches the dense operator oracle") {
  std::mt19937_64 gen(31);
  const auto& k = kernels::table(kernels::Isa::scalar);
  for (int n = 1; n <= 5; ++n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const RowMajor rho = random_matrix(dim, gen);
    const double theta = 0.37, kappa = 1.3;
    const auto hz = kernels::frequency_diagonal(n, theta);
    RowMajor out(dim, dim);
    k.lindblad_rhs(rho.data(), out.data(), hz.data(), n, kappa);
    const CMatrix want = oracle::lindblad_rhs_dense(CMatrix(rho), n, theta, kappa);
    CHECK(testing::max_abs(CMatrix(out) - want) < 1e-12);
  }
}

TEST_CASE("every available kernel variant agrees with the scalar reference") {
  std::mt19937_64 gen(32);
  const auto& ref = kernels::table(kernels::Isa::scalar);
  for (kernels::Isa isa : kernels::available_isas()) {
    CAPTURE(kernels::to_string(isa));
    const auto& k = kernels::table(isa);
    CHECK(k.isa == isa);
    for (int n = 1; n <= 7; ++n) {
      const Eigen::Index dim = Eigen::Index{1} << n;
      const RowMajor rho = random_matrix(dim, gen);
      const auto hz = kernels::frequency_diagonal(n, -0.21);
      RowMajor a(dim, dim), b(dim, dim);
      ref.lindblad_rhs(rho.data(), a.data(), hz.data(), n, 0.9);
      k.lindblad_rhs(rho.data(), b.data(), hz.data(), n, 0.9);
      CHECK(testing::max_abs(CMatrix(a - b)) < 1e-13);
    }
    // Odd lengths exercise the tails.
    for (std::size_t len : {1u, 2u, 3u, 7u, 64u, 65u}) {
      const RowMajor x = random_matrix(1, gen).replicate(1, len);
      const RowMajor y0 = random_matrix(1, gen).replicate(1, len);
      RowMajor y1 = y0, y2 = y0, o1(1, len), o2(1, len);
      ref.axpy(len, 0.3, x.data(), y1.data());
      k.axpy(len, 0.3, x.data(), y2.data());
      CHECK(testing::max_abs(CMatrix(y1 - y2)) < 1e-15);
      ref.add_scaled(len, x.data(), -1.7, y0.data(), o1.data());
      k.add_scaled(len, x.data(), -1.7, y0.data(), o2.data());
      CHECK(testing::max_abs(CMatrix(o1 - o2)) < 1e-15);
    }
  }
}

TEST_CASE("kernel dispatch") {
  CHECK(kernels::available(kernels::Isa::scalar));
  CHECK(kernels::available(kernels::best_isa()));
  for (kernels::Isa isa : {kernels::Isa::scalar, kernels::Isa::avx2, kernels::Isa::neon}) {
    if (!kernels::available(isa)) {
      CHECK(testing::thrown_kind([&] { kernels::table(isa); }) == ErrorKind::unsupported);
    }
  }
  const auto hz = kernels::frequency_diagonal(3, 2.0);
  CHECK(hz[0] == 3.0);
  CHECK(hz[7] == -3.0);
  CHECK(hz[5] == -1.0);
}
