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

#include <functional>

namespace vrqfi {

// First and second derivative of a scalar function at a point.
struct Derivatives {
  double first = 0.0;
  double second = 0.0;
};

// Central differences at steps h and h/2, one Richardson step each
// (error O(h^4) for smooth f). Samples f at x, x +- h, x +- h/2.
Derivatives central_derivatives(const std::function<double(double)>& f, double x, double h);

// One-sided differences toward `dir` (+1 or -1) at steps h and h/2 with one
// Richardson step each (error O(h^2)). Samples f at x, x + dir*{h/4, h/2, h}.
Derivatives one_sided_derivatives(const std::function<double(double)>& f, double x, double h,
                                  double dir);

}  // namespace vrqfi
