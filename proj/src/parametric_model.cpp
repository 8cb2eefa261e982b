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

#include "vrqfi/parametric_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vrqfi/errors.hpp"

namespace vrqfi {

ParametricModel::ParametricModel(std::string name, std::size_t dim, Domain domain,
                                 StateFn state, std::optional<DerivativeFn> derivative,
                                 ModelContext context)
    : name_(std::move(name)),
      dim_(dim),
      domain_(domain),
      state_(std::move(state)),
      derivative_(std::move(derivative)),
      context_(context) {}

void ParametricModel::check_domain(double theta) const {
  if (!std::isfinite(theta) || !domain_.contains(theta)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << name_ << ": parameter " << theta << " outside domain "
        << (domain_.lo_closed ? "[" : "(") << domain_.lo << ", " << domain_.hi
        << (domain_.hi_closed ? "]" : ")");
    throw Error(ErrorKind::domain, msg.str());
  }
}

DensityMatrix ParametricModel::state(double theta) const {
  check_domain(theta);
  return DensityMatrix(state_(theta));
}

HermitianOperator ParametricModel::derivative(double theta) const {
  if (!derivative_) return numerical_derivative(theta);
  check_domain(theta);
  return HermitianOperator(hermitize((*derivative_)(theta)), OperatorRole::derivative);
}

HermitianOperator ParametricModel::numerical_derivative(double theta) const {
  check_domain(theta);
  const double h = 1e-5 * std::max(1.0, std::abs(theta));
  const bool up = domain_.contains(theta + h);
  const bool down = domain_.contains(theta - h);
  CMatrix d;
  if (up && down) {
    d = (state_(theta + h) - state_(theta - h)) / (2.0 * h);
  } else if (up && domain_.contains(theta + 2.0 * h)) {
    d = (-3.0 * state_(theta) + 4.0 * state_(theta + h) - state_(theta + 2.0 * h)) / (2.0 * h);
  } else if (down && domain_.contains(theta - 2.0 * h)) {
    d = (3.0 * state_(theta) - 4.0 * state_(theta - h) + state_(theta - 2.0 * h)) / (2.0 * h);
  } else {
    throw Error(ErrorKind::domain, name_ + ": domain too narrow for a finite-difference derivative");
  }
  return HermitianOperator(hermitize(d), OperatorRole::derivative);
}

}  // namespace vrqfi
