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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "vrqfi/errors.hpp"
#include "vrqfi/parametric_model.hpp"

namespace testing {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// Runs f and reports the ErrorKind it threw, or nothing.
template <class F>
std::optional<vrqfi::ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const vrqfi::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

/// theta -> U(theta) D(theta) U(theta)^dagger with U = exp(-i H theta) and
/// D(theta) = diag(d0 + s * theta) normalised. Zero entries in d0 with
/// matching zero slopes keep the rank fixed.
inline vrqfi::ParametricModel unitary_family(const Eigen::MatrixXcd& h, Eigen::VectorXd d0,
                                             Eigen::VectorXd slope) {
  const auto dim = static_cast<std::size_t>(h.rows());
  auto state = [h, d0, slope](double theta) -> Eigen::MatrixXcd {
    const Eigen::MatrixXcd u = (std::complex<double>(0, -theta) * h).exp();
    Eigen::VectorXd d = d0 + theta * slope;
    d /= d.sum();
    return u * d.cast<std::complex<double>>().asDiagonal() * u.adjoint();
  };
  return vrqfi::ParametricModel("unitary-family", dim, vrqfi::Domain{-0.5, 0.5, true, true}, state);
}

}  // namespace testing
