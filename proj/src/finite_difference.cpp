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

#include "vrqfi/finite_difference.hpp"

namespace vrqfi {

Derivatives central_derivatives(const std::function<double(double)>& f, double x, double h) {
  const double f0 = f(x);
  const double fp = f(x + h), fm = f(x - h);
  const double fp2 = f(x + 0.5 * h), fm2 = f(x - 0.5 * h);
  const double d1_h = (fp - fm) / (2.0 * h);
  const double d1_h2 = (fp2 - fm2) / h;
  const double d2_h = (fp - 2.0 * f0 + fm) / (h * h);
  const double d2_h2 = (fp2 - 2.0 * f0 + fm2) / (0.25 * h * h);
  return {(4.0 * d1_h2 - d1_h) / 3.0, (4.0 * d2_h2 - d2_h) / 3.0};
}

Derivatives one_sided_derivatives(const std::function<double(double)>& f, double x, double h,
                                  double dir) {
  const double s = dir < 0 ? -h : h;
  const double f0 = f(x);
  const double f1 = f(x + s), f2 = f(x + 0.5 * s), f4 = f(x + 0.25 * s);
  const double d1_h = (f1 - f0) / s;
  const double d1_h2 = (f2 - f0) / (0.5 * s);
  const double d2_h = (f1 - 2.0 * f2 + f0) / (0.25 * s * s);
  const double d2_h2 = (f2 - 2.0 * f4 + f0) / (0.0625 * s * s);
  return {2.0 * d1_h2 - d1_h, 2.0 * d2_h2 - d2_h};
}

}  // namespace vrqfi
