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
#include "vrqfi/linalg.hpp"

using namespace vrqfi;
using testing::thrown_kind;

TEST_CASE("density matrix invariants are enforced") {
  CMatrix ok = CMatrix::Zero(2, 2);
  ok(0, 0) = 0.25;
  ok(1, 1) = 0.75;
  CHECK_NOTHROW(DensityMatrix{ok});

  CMatrix bad_trace = ok;
  bad_trace(1, 1) = 0.7;
  CHECK(thrown_kind([&] { DensityMatrix{bad_trace}; }) == ErrorKind::invalid_input);

  CMatrix not_hermitian = ok;
  not_hermitian(0, 1) = cplx(0.1, 0.0);
  CHECK(thrown_kind([&] { DensityMatrix{not_hermitian}; }) == ErrorKind::invalid_input);

  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.2;
  negative(1, 1) = -0.2;
  CHECK(thrown_kind([&] { DensityMatrix{negative}; }) == ErrorKind::invalid_input);

  CHECK(thrown_kind([&] { DensityMatrix{CMatrix::Identity(2, 3)}; }) == ErrorKind::invalid_input);
}

TEST_CASE("hermitian operators reject anti-hermitian parts") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = cplx(0.0, 1.0);
  CHECK(thrown_kind([&] { HermitianOperator{m}; }) == ErrorKind::invalid_input);
  m(1, 0) = cplx(0.0, -1.0);
  CHECK_NOTHROW(HermitianOperator{m});
}

TEST_CASE("spectral decomposition reconstructs and sorts") {
  std::mt19937_64 gen(11);
  for (int n = 1; n <= 8; ++n) {
    const DensityMatrix rho(oracle::random_density(n, gen));
    const SpectralData s = spectral_decompose(rho);
    CHECK(testing::max_abs(s.reconstruct() - rho.matrix()) < 1e-12);
    for (Eigen::Index k = 1; k < s.eigenvalues.size(); ++k) {
      CHECK(s.eigenvalues[k - 1] >= s.eigenvalues[k]);
    }
    CHECK(s.effective_rank == std::size_t(n));
    const CMatrix gram = s.eigenvectors.adjoint() * s.eigenvectors;
    CHECK(testing::max_abs(gram - CMatrix::Identity(n, n)) < 1e-12);
  }
}

TEST_CASE("effective rank counts eigenvalues above the support tolerance") {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5 - 1e-13;
  m(2, 2) = 1e-13;
  const SpectralData s = spectral_decompose(DensityMatrix(m));
  CHECK(s.effective_rank == 2);
  CHECK(s.eigenvalues[2] == doctest::Approx(1e-13));
  CHECK(spectral_decompose(DensityMatrix(m), 1e-14).effective_rank == 3);
}
