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

#include <utility>
#include <vector>

#include "vrqfi/linalg.hpp"
#include "vrqfi/parametric_model.hpp"

namespace vrqfi {

/// Uhlmann fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0, 1].
///
/// sqrt(rho) is formed from the eigen-decomposition of rho restricted to its
/// support (eigenvalues above `support_tol`), so the inner matrix is only
/// rank(rho) x rank(rho). This keeps sub-tolerance eigenvalue noise of
/// rank-deficient states out of the square roots.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma,
                double support_tol = kSupportTol);

/// Symmetric logarithmic derivative from the spectral formula. Matrix
/// elements between eigenvectors whose eigenvalues sum to zero (after
/// zeroing eigenvalues <= support_tol) are set to zero.
HermitianOperator sld(const SpectralData& spectrum, const HermitianOperator& drho);
HermitianOperator sld(const DensityMatrix& rho, const HermitianOperator& drho,
                      double support_tol = kSupportTol);

/// Quantum Fisher information, 2 sum |<k|drho|l>|^2 / (l_k + l_l) over pairs
/// with positive eigenvalue sum.
double qfi(const SpectralData& spectrum, const HermitianOperator& drho);
double qfi(const DensityMatrix& rho, const HermitianOperator& drho,
           double support_tol = kSupportTol);

/// Convenience: qfi of model at theta using its (analytic or numerical) derivative.
double qfi(const ParametricModel& model, double theta, double support_tol = kSupportTol);

/// Bures metric from the second-order expansion of 2 [1 - F(rho_theta, rho_theta+eps)].
/// Symmetric average of both neighbours when both lie in the domain (one
/// neighbour at a domain edge), followed by one Richardson step at eps/2.
/// Throws step_size when 1 - F drops below 1e-14.
double bures_metric_fd(const ParametricModel& model, double theta, double eps = 1e-4);

enum class Side { below = -1, above = 1 };

struct QfiLimit {
  double value = 0.0;
  // |change between the last two extrapolants| / max(|limit|, max |Q_k|)
  double convergence = 0.0;
  std::vector<std::pair<double, double>> samples;  // (theta, Q_theta)
};

/// One-sided limit of Q_theta as theta -> theta_bar, from Q sampled at
/// theta_bar + side * h * 2^-k for k < steps and two Richardson levels.
/// Throws divergence (with the samples attached) when the last two
/// extrapolants differ by more than 1e-3 relative to max(|limit|, max |Q_k|).
QfiLimit qfi_limit(const ParametricModel& model, double theta_bar, Side side,
                   int steps = 6, double h = 1e-2);

}  // namespace vrqfi
