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

#include "vrqfi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "vrqfi/errors.hpp"

namespace vrqfi {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::domain: return "domain";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::degenerate_model: return "degenerate-model";
    case ErrorKind::step_size: return "step-size";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::not_a_discontinuity: return "not-a-discontinuity";
    case ErrorKind::multi_branch: return "multi-branch";
    case ErrorKind::misidentified_outcome: return "misidentified-outcome";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::insufficient_replicates: return "insufficient-replicates";
  }
  return "unknown";
}

double hermiticity_defect(const CMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix hermitize(const CMatrix& a) { return 0.5 * (a + a.adjoint()); }

DensityMatrix::DensityMatrix(CMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw Error(ErrorKind::invalid_input, "density matrix must be square and non-empty");
  }
  if (!m_.allFinite()) {
    throw Error(ErrorKind::invalid_input, "density matrix has non-finite entries");
  }
  const double defect = hermiticity_defect(m_);
  if (defect > kDensityHermitianTol) {
    throw Error(ErrorKind::invalid_input,
                "density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const double trace = m_.trace().real();
  if (std::abs(trace - 1.0) > kDensityTraceTol) {
    throw Error(ErrorKind::invalid_input,
                "density matrix trace " + std::to_string(trace) + " differs from 1");
  }
  if (m_.rows() == 1) return;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::numerical, "eigensolver failed while validating density matrix");
  }
  if (es.eigenvalues().minCoeff() < -kDensityPsdTol) {
    throw Error(ErrorKind::invalid_input, "density matrix has a negative eigenvalue");
  }
}

HermitianOperator::HermitianOperator(CMatrix entries, OperatorRole role)
    : m_(std::move(entries)), role_(role) {
  if (m_.rows() != m_.cols()) {
    throw Error(ErrorKind::invalid_input, "operator must be square");
  }
  if (hermiticity_defect(m_) > kOperatorHermitianTol) {
    throw Error(ErrorKind::invalid_input, "operator is not Hermitian");
  }
}

CMatrix SpectralData::reconstruct() const {
  return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
}

void hermitian_eigen(const CMatrix& a, RVector& values, CMatrix& vectors,
                     double hermitian_tol) {
  if (hermiticity_defect(a) > hermitian_tol) {
    throw Error(ErrorKind::invalid_input, "eigen-decomposition requires a Hermitian matrix");
  }
  // Eigen reads only the lower triangle; symmetrise so both halves count.
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(a));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::numerical, "Hermitian eigensolver did not converge");
  }
  values = es.eigenvalues().reverse();
  vectors = es.eigenvectors().rowwise().reverse();
}

SpectralData spectral_decompose(const DensityMatrix& rho, double support_tol) {
  if (!(support_tol >= 0.0)) {
    throw Error(ErrorKind::invalid_input, "support tolerance must be non-negative");
  }
  SpectralData out;
  hermitian_eigen(rho.matrix(), out.eigenvalues, out.eigenvectors, kDensityHermitianTol);
  out.eigenvalues = out.eigenvalues.cwiseMax(0.0);
  out.support_tol = support_tol;
  out.effective_rank = static_cast<std::size_t>(
      std::count_if(out.eigenvalues.begin(), out.eigenvalues.end(),
                    [&](double v) { return v > support_tol; }));
  return out;
}

}  // namespace vrqfi
