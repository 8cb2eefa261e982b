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

#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "vrqfi/linalg.hpp"

namespace vrqfi {

// Parameter interval; each end is open or closed.
struct Domain {
  double lo = -INFINITY;
  double hi = INFINITY;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(double theta) const {
    const bool above = lo_closed ? theta >= lo : theta > lo;
    const bool below = hi_closed ? theta <= hi : theta < hi;
    return above && below;
  }
};

// Physical context for the open-system models. Unused fields are ignored.
struct ModelContext {
  double kappa = 1.0;  // decay rate
  double time = 1.0;   // evolution time
  int qubits = 1;
};

// A named one-parameter family of states theta -> rho_theta.
class ParametricModel {
 public:
  using StateFn = std::function<CMatrix(double)>;
  using DerivativeFn = std::function<CMatrix(double)>;

  ParametricModel(std::string name, std::size_t dim, Domain domain, StateFn state,
                  std::optional<DerivativeFn> derivative = std::nullopt,
                  ModelContext context = {});

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Domain& domain() const { return domain_; }
  const ModelContext& context() const { return context_; }
  bool has_analytic_derivative() const { return derivative_.has_value(); }

  // Throws Error{domain} outside the declared domain.
  DensityMatrix state(double theta) const;

  // Analytic derivative when available, otherwise a central difference with
  // step 1e-5 * max(1, |theta|) (one-sided second order at a domain edge).
  HermitianOperator derivative(double theta) const;

  HermitianOperator numerical_derivative(double theta) const;

 private:
  void check_domain(double theta) const;

  std::string name_;
  std::size_t dim_;
  Domain domain_;
  StateFn state_;
  std::optional<DerivativeFn> derivative_;
  ModelContext context_;
};

}  // namespace vrqfi
