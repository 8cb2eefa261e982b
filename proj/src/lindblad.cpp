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

#include "vrqfi/lindblad.hpp"

#include <algorithm>
#include <cmath>

#include "vrqfi/errors.hpp"
#include "vrqfi/models.hpp"

namespace vrqfi {
namespace {

using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kTraceDriftTol = 1e-8;

}  // namespace

CMatrix ghz_initial_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
    throw Error(ErrorKind::domain, "dense GHZ state supports 1 to 10 qubits");
  }
  const auto dim = Eigen::Index{1} << n_qubits;
  CMatrix rho = CMatrix::Zero(dim, dim);
  rho(0, 0) = rho(0, dim - 1) = rho(dim - 1, 0) = rho(dim - 1, dim - 1) = 0.5;
  return rho;
}

double default_lindblad_dt(double kappa) { return 1e-4 * std::min(1.0, 1.0 / kappa); }

DensityMatrix lindblad_integrate(int n_qubits, double theta, double kappa, double t_final,
                                 double dt, const LindbladOptions& options) {
  if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
    throw Error(ErrorKind::domain, "integrator supports 1 to 10 qubits");
  }
  if (!(dt > 0.0)) throw Error(ErrorKind::invalid_input, "dt must be positive");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw Error(ErrorKind::domain, "final time must be non-negative");
  }
  if (!(kappa >= 0.0) || !std::isfinite(theta)) {
    throw Error(ErrorKind::domain, "kappa must be non-negative and theta finite");
  }
  const kernels::KernelTable& k = kernels::table(options.isa.value_or(kernels::best_isa()));

  RowMajor rho = ghz_initial_state(n_qubits);
  const auto dim = rho.rows();
  const auto n = static_cast<std::size_t>(rho.size());
  const std::vector<double> hz = kernels::frequency_diagonal(n_qubits, theta);

  const auto steps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
  const double h = steps > 0 ? t_final / double(steps) : 0.0;
  RowMajor k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), tmp(dim, dim);

  for (long s = 0; s < steps; ++s) {
    k.lindblad_rhs(rho.data(), k1.data(), hz.data(), n_qubits, kappa);
    k.add_scaled(n, rho.data(), 0.5 * h, k1.data(), tmp.data());
    k.lindblad_rhs(tmp.data(), k2.data(), hz.data(), n_qubits, kappa);
    k.add_scaled(n, rho.data(), 0.5 * h, k2.data(), tmp.data());
    k.lindblad_rhs(tmp.data(), k3.data(), hz.data(), n_qubits, kappa);
    k.add_scaled(n, rho.data(), h, k3.data(), tmp.data());
    k.lindblad_rhs(tmp.data(), k4.data(), hz.data(), n_qubits, kappa);
    k.axpy(n, h / 6.0, k1.data(), rho.data());
    k.axpy(n, h / 3.0, k2.data(), rho.data());
    k.axpy(n, h / 3.0, k3.data(), rho.data());
    k.axpy(n, h / 6.0, k4.data(), rho.data());

    tmp = rho.adjoint();
    rho = 0.5 * (rho + tmp);
    const double trace = rho.trace().real();
    // The generator is traceless, so drift only appears once round-off is
    // amplified by an unstable step (or the state has gone non-finite).
    if (!(std::abs(trace - 1.0) <= kTraceDriftTol) || !rho.allFinite()) {
      throw Error(ErrorKind::step_size, "trace drifted beyond 1e-8; reduce dt");
    }
    rho /= trace;
  }
  return DensityMatrix(CMatrix(rho));
}

}  // namespace vrqfi
