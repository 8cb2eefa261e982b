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

#include <Eigen/Dense>

namespace vrqfi {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Eigenvalues at or below this are treated as exactly zero.
inline constexpr double kSupportTol = 1e-12;

inline constexpr double kDensityHermitianTol = 1e-12;
inline constexpr double kDensityTraceTol = 1e-10;
inline constexpr double kDensityPsdTol = 1e-10;
inline constexpr double kOperatorHermitianTol = 1e-10;

// Largest |A(i,j) - conj(A(j,i))|.
double hermiticity_defect(const CMatrix& a);

// (A + A^dagger) / 2.
CMatrix hermitize(const CMatrix& a);

// A validated quantum state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  // Throws Error{invalid_input} if any invariant is violated.
  explicit DensityMatrix(CMatrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  cplx operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

 private:
  CMatrix m_;
};

enum class OperatorRole { generic, derivative, sld };

class HermitianOperator {
 public:
  // Throws Error{invalid_input} when the defect exceeds kOperatorHermitianTol.
  explicit HermitianOperator(CMatrix entries,
                             OperatorRole role = OperatorRole::generic);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  OperatorRole role() const { return role_; }

 private:
  CMatrix m_;
  OperatorRole role_;
};

struct SpectralData {
  RVector eigenvalues;   // descending, clamped to >= 0
  CMatrix eigenvectors;  // column k belongs to eigenvalues[k]
  double support_tol = kSupportTol;
  std::size_t effective_rank = 0;

  std::size_t dim() const { return static_cast<std::size_t>(eigenvalues.size()); }
  CMatrix reconstruct() const;
};

// Eigen-decomposition of a Hermitian matrix, eigenvalues descending and
// unclamped. Throws invalid_input on a non-Hermitian argument and
// numerical on eigensolver failure.
void hermitian_eigen(const CMatrix& a, RVector& values, CMatrix& vectors,
                     double hermitian_tol = kOperatorHermitianTol);

SpectralData spectral_decompose(const DensityMatrix& rho,
                                double support_tol = kSupportTol);

}  // namespace vrqfi
