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

#include "vrqfi/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vrqfi/errors.hpp"

namespace vrqfi {
namespace {

constexpr double kMinInfidelity = 1e-14;
constexpr double kLimitRelTol = 1e-3;

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::invalid_input,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Eigenvalues at or below the support tolerance, zeroed.
RVector support_values(const SpectralData& s) {
  RVector v = s.eigenvalues;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] <= s.support_tol) v[i] = 0.0;
  }
  return v;
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, double support_tol) {
  require_same_dim(rho.dim(), sigma.dim());
  RVector lam;
  CMatrix vec;
  hermitian_eigen(rho.matrix(), lam, vec, kDensityHermitianTol);
  Eigen::Index rank = 0;
  while (rank < lam.size() && lam[rank] > support_tol) ++rank;
  if (rank == 0) return 0.0;

  const CMatrix v = vec.leftCols(rank);
  const RVector root = lam.head(rank).cwiseSqrt();
  CMatrix inner = root.cast<cplx>().asDiagonal() * (v.adjoint() * sigma.matrix() * v) *
                  root.cast<cplx>().asDiagonal();
  RVector mu;
  CMatrix unused;
  hermitian_eigen(hermitize(inner), mu, unused);
  double f = 0.0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) f += std::sqrt(std::max(mu[i], 0.0));
  return std::clamp(f, 0.0, 1.0);
}

HermitianOperator sld(const SpectralData& spectrum, const HermitianOperator& drho) {
  require_same_dim(spectrum.dim(), drho.dim());
  const RVector lam = support_values(spectrum);
  if (lam.maxCoeff() <= 0.0) {
    throw Error(ErrorKind::degenerate_model, "SLD undefined: every eigenvalue pair sums to zero");
  }
  const CMatrix& v = spectrum.eigenvectors;
  const CMatrix d = v.adjoint() * drho.matrix() * v;
  const Eigen::Index n = d.rows();
  CMatrix l = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double s = lam[k] + lam[j];
      if (s > 0.0) l(k, j) = 2.0 * d(k, j) / s;
    }
  }
  return HermitianOperator(hermitize(v * l * v.adjoint()), OperatorRole::sld);
}

HermitianOperator sld(const DensityMatrix& rho, const HermitianOperator& drho,
                      double support_tol) {
  return sld(spectral_decompose(rho, support_tol), drho);
}

double qfi(const SpectralData& spectrum, const HermitianOperator& drho) {
  require_same_dim(spectrum.dim(), drho.dim());
  const RVector lam = support_values(spectrum);
  if (lam.maxCoeff() <= 0.0) {
    throw Error(ErrorKind::degenerate_model, "QFI undefined: every eigenvalue pair sums to zero");
  }
  const CMatrix& v = spectrum.eigenvectors;
  const CMatrix d = v.adjoint() * drho.matrix() * v;
  const Eigen::Index n = d.rows();
  double q = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double s = lam[k] + lam[j];
      if (s > 0.0) q += std::norm(d(k, j)) / s;
    }
  }
  return 2.0 * q;
}

double qfi(const DensityMatrix& rho, const HermitianOperator& drho, double support_tol) {
  return qfi(spectral_decompose(rho, support_tol), drho);
}

double qfi(const ParametricModel& model, double theta, double support_tol) {
  return qfi(model.state(theta), model.derivative(theta), support_tol);
}

double bures_metric_fd(const ParametricModel& model, double theta, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::invalid_input, "eps must be positive");
  const DensityMatrix rho = model.state(theta);
  const Domain& dom = model.domain();
  const bool up = dom.contains(theta + eps);
  const bool down = dom.contains(theta - eps);
  if (!up && !down) {
    throw Error(ErrorKind::domain, "no neighbour of theta inside the domain at this eps");
  }

  auto infidelity = [&](double other) {
    const double one_minus_f = 1.0 - fidelity(rho, model.state(other));
    if (one_minus_f < kMinInfidelity) {
      throw Error(ErrorKind::step_size,
                  "1 - F below 1e-14 at eps " + std::to_string(std::abs(other - theta)) +
                      "; increase eps");
    }
    return one_minus_f;
  };
  auto estimate = [&](double e) {
    if (up && down) return (2.0 * infidelity(theta + e) + 2.0 * infidelity(theta - e)) / (2.0 * e * e);
    return 2.0 * infidelity(up ? theta + e : theta - e) / (e * e);
  };

  const double coarse = estimate(eps);
  const double fine = estimate(0.5 * eps);
  // The symmetric average leaves an O(eps^2) error, a single neighbour O(eps).
  if (up && down) return (4.0 * fine - coarse) / 3.0;
  return 2.0 * fine - coarse;
}

QfiLimit qfi_limit(const ParametricModel& model, double theta_bar, Side side, int steps,
                   double h) {
  if (steps < 4) throw Error(ErrorKind::invalid_input, "qfi_limit needs at least 4 steps");
  if (!(h > 0.0)) throw Error(ErrorKind::invalid_input, "qfi_limit step must be positive");
  const double dir = side == Side::above ? 1.0 : -1.0;

  QfiLimit out;
  std::vector<double> q;
  for (int k = 0; k < steps; ++k) {
    const double theta = theta_bar + dir * std::ldexp(h, -k);
    q.push_back(qfi(model, theta));
    out.samples.emplace_back(theta, q.back());
  }
  // First level cancels the O(h) term, second the O(h^2) term.
  std::vector<double> first;
  for (std::size_t k = 0; k + 1 < q.size(); ++k) first.push_back(2.0 * q[k + 1] - q[k]);
  std::vector<double> second;
  for (std::size_t k = 0; k + 1 < first.size(); ++k) {
    second.push_back((4.0 * first[k + 1] - first[k]) / 3.0);
  }
  const double last = second.back();
  const double prev = second[second.size() - 2];
  const double diff = std::abs(last - prev);
  // Relative to the sequence's own magnitude so a vanishing limit still
  // converges, while a blow-up (extrapolants growing like the samples) does not.
  double scale = std::abs(last);
  for (double v : q) scale = std::max(scale, std::abs(v));
  out.value = last;
  out.convergence = diff / std::max(scale, 1e-300);
  if (!std::isfinite(last) || (diff > kLimitRelTol * scale && diff > 1e-12)) {
    throw Error(ErrorKind::divergence,
                "QFI sequence does not converge toward theta_bar (relative change " +
                    std::to_string(out.convergence) + ")",
                out.samples);
  }
  return out;
}

}  // namespace vrqfi
