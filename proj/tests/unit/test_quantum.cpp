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

#include <numbers>

#include "helpers.hpp"
#include "vrqfi/models.hpp"
#include "vrqfi/quantum.hpp"

using namespace vrqfi;
using testing::rel_err;
using testing::thrown_kind;

namespace {

CMatrix traceless_hermitian(Eigen::Index n, std::mt19937_64& gen) {
  CMatrix h = oracle::random_hermitian(n, gen);
  return h - (h.trace() / double(n)) * CMatrix::Identity(n, n);
}

}  // namespace

TEST_CASE("qfi matches the Lyapunov oracle on full-rank states") {
  std::mt19937_64 gen(1);
  for (int n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const DensityMatrix rho(oracle::random_density(n, gen));
      const HermitianOperator d(traceless_hermitian(n, gen), OperatorRole::derivative);
      CHECK(rel_err(qfi(rho, d), oracle::qfi_lyapunov(rho.matrix(), d.matrix())) < 1e-9);
    }
  }
}

TEST_CASE("qfi matches the Lyapunov oracle on rank-deficient unitary families") {
  std::mt19937_64 gen(2);
  for (int n = 2; n <= 5; ++n) {
    Eigen::VectorXd d0 = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < n - 1; ++k) d0[k] = 1.0 + k;
    const auto model = testing::unitary_family(oracle::random_hermitian(n, gen), d0,
                                               Eigen::VectorXd::Zero(n));
    for (double theta : {-0.3, 0.0, 0.2}) {
      const DensityMatrix rho = model.state(theta);
      const HermitianOperator d = model.derivative(theta);
      CHECK(spectral_decompose(rho).effective_rank == std::size_t(n - 1));
      CHECK(rel_err(qfi(rho, d), oracle::qfi_lyapunov(rho.matrix(), d.matrix())) < 1e-7);
    }
  }
}

TEST_CASE("sld solves the Lyapunov equation and gives the qfi") {
  std::mt19937_64 gen(3);
  for (int n = 2; n <= 5; ++n) {
    const DensityMatrix rho(oracle::random_density(n, gen));
    const HermitianOperator d(traceless_hermitian(n, gen));
    const HermitianOperator l = sld(rho, d);
    CHECK(l.role() == OperatorRole::sld);
    const CMatrix residual = l.matrix() * rho.matrix() + rho.matrix() * l.matrix() - 2.0 * d.matrix();
    CHECK(testing::max_abs(residual) < 1e-9);
    CHECK(testing::max_abs(l.matrix() - oracle::sld_lyapunov(rho.matrix(), d.matrix())) < 1e-7);
    const double trl2 = (rho.matrix() * l.matrix() * l.matrix()).trace().real();
    CHECK(rel_err(trl2, qfi(rho, d)) < 1e-10);
  }
}

TEST_CASE("sld vanishes on the kernel block") {
  // rho = diag(1, 0): only the (0,1) coherence and the (0,0) entry matter.
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  CMatrix d(2, 2);
  d << 0.0, 0.3, 0.3, 0.0;
  const HermitianOperator l = sld(DensityMatrix(m), HermitianOperator(d));
  CHECK(std::abs(l.matrix()(1, 1)) == 0.0);
  CHECK(std::abs(l.matrix()(0, 1) - 0.6) < 1e-15);
  CHECK(qfi(DensityMatrix(m), HermitianOperator(d)) == doctest::Approx(4 * 0.09));
}

TEST_CASE("fidelity matches the matrix square-root oracle") {
  std::mt19937_64 gen(4);
  for (int n = 2; n <= 6; ++n) {
    const DensityMatrix rho(oracle::random_density(n, gen));
    const DensityMatrix sigma(oracle::random_density(n, gen));
    const double f = fidelity(rho, sigma);
    CHECK(std::abs(f - oracle::fidelity_sqrtm(rho.matrix(), sigma.matrix())) < 1e-10);
    CHECK(std::abs(f - fidelity(sigma, rho)) < 1e-10);
    CHECK(f <= 1.0);
    CHECK(std::abs(fidelity(rho, rho) - 1.0) < 1e-12);
  }
}

TEST_CASE("fidelity of pure states is the overlap modulus") {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> normal;
  for (int rep = 0; rep < 10; ++rep) {
    CVector a(3), b(3);
    for (int k = 0; k < 3; ++k) {
      a[k] = cplx(normal(gen), normal(gen));
      b[k] = cplx(normal(gen), normal(gen));
    }
    a.normalize();
    b.normalize();
    const double f = fidelity(DensityMatrix(a * a.adjoint()), DensityMatrix(b * b.adjoint()));
    CHECK(std::abs(f - std::abs(a.dot(b))) < 1e-10);
  }
}

TEST_CASE("four times the Bures metric equals the qfi on regular families") {
  std::mt19937_64 gen(6);
  for (int n = 2; n <= 4; ++n) {
    Eigen::VectorXd d0(n), slope(n);
    for (int k = 0; k < n; ++k) {
      d0[k] = 1.0 + 0.5 * k;
      slope[k] = 0.3 * (k % 2 == 0 ? 1.0 : -1.0);
    }
    const auto model = testing::unitary_family(oracle::random_hermitian(n, gen), d0, slope);
    for (double theta : {-0.2, 0.1, 0.5}) {
      const double q = qfi(model, theta);
      CHECK(rel_err(4.0 * bures_metric_fd(model, theta, 1e-3), q) < 1e-5);
    }
  }
}

TEST_CASE("bures metric refuses steps too small to resolve") {
  const auto model = trig_model();
  CHECK(thrown_kind([&] { bures_metric_fd(model, 0.7, 1e-9); }) == ErrorKind::step_size);
  CHECK(thrown_kind([&] { bures_metric_fd(model, 0.7, -1.0); }) == ErrorKind::invalid_input);
}

TEST_CASE("qfi limits: finite jump and divergence") {
  const QfiLimit trig = qfi_limit(trig_model(), 0.0, Side::above);
  CHECK(std::abs(trig.value - 4.0) < 1e-9);
  CHECK(trig.samples.size() == 6);

  try {
    qfi_limit(classical_bit_model(), 0.0, Side::above);
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::divergence);
    REQUIRE(e.evidence().size() == 6);
    // Q_p = 1 / (p (1 - p)) grows as the ladder approaches 0.
    CHECK(e.evidence().back().second > e.evidence().front().second);
  }
  CHECK(thrown_kind([&] { qfi_limit(trig_model(), 0.0, Side::above, 3); }) ==
        ErrorKind::invalid_input);
}

TEST_CASE("model domains are enforced") {
  CHECK(thrown_kind([] { qfi(trig_model(), -0.1); }) == ErrorKind::domain);
  CHECK(thrown_kind([] { qfi(classical_bit_model(), 1.5); }) == ErrorKind::domain);
}

TEST_CASE("numerical derivative agrees with analytic ones") {
  const auto model = transverse_qubit_model(1.3, 0.8);
  for (double theta : {-0.4, 0.0, 0.31}) {
    CHECK(testing::max_abs(model.derivative(theta).matrix() -
                           model.numerical_derivative(theta).matrix()) < 1e-8);
  }
  const auto trig = trig_model();
  CHECK(testing::max_abs(trig.derivative(0.0).matrix() - trig.numerical_derivative(0.0).matrix()) <
        1e-8);
  CHECK(testing::max_abs(trig.derivative(std::numbers::pi / 2).matrix() -
                         trig.numerical_derivative(std::numbers::pi / 2).matrix()) < 1e-8);
}
