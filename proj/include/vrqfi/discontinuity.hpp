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

#include <string>
#include <utility>
#include <vector>

#include "vrqfi/classical.hpp"
#include "vrqfi/parametric_model.hpp"

namespace vrqfi {

inline constexpr double kBranchOverlap = 0.5;

// 1e-3 * max(1, |theta_bar|).
double default_branch_step(double theta_bar);

struct EigenvalueBranch {
  double theta_bar = 0.0;
  double h = 0.0;
  bool above = false;  // theta_bar + h was sampled
  bool below = false;  // theta_bar - h was sampled
  std::size_t rank_at_bar = 0;
  std::vector<std::pair<double, double>> samples;  // (theta, lambda_m), ascending theta

  // Value at a sampled theta; throws invalid_input for anything else.
  double at(double theta) const;
};

/// Samples the eigenvalue that vanishes at theta_bar at theta_bar and
/// theta_bar +/- {h, h/2, h/4}. A side whose points fall outside the domain
/// is skipped; at least one side must be available. Every sampled side must
/// gain exactly one rank relative to theta_bar (otherwise
/// not_a_discontinuity, or multi_branch for a larger jump). The branch is
/// seeded by overlap > 0.5 with the kernel at theta_bar and followed outward
/// by overlap > 0.5 between neighbouring points.
EigenvalueBranch vanishing_eigenvalue_branch(const ParametricModel& model, double theta_bar,
                                             double h);

struct DiscontinuityReport {
  double theta_bar = 0.0;
  double v = 0.0;  // d lambda_m / d theta
  double a = 0.0;  // d^2 lambda_m / d theta^2
  DiscontinuityKind kind = DiscontinuityKind::continuous;
  double delta_Q_predicted = 0.0;  // 2a for a jump, +inf for the second kind
  double delta_Q_measured = 0.0;   // qfi_limit - qfi_at_bar
  double qfi_at_bar = 0.0;
  double qfi_limit = 0.0;          // +inf for the second kind
  std::vector<std::pair<double, double>> evidence;  // (theta, Q_theta) when divergent
  std::string note;
};

inline constexpr double kJumpAbsTol = 1e-3;
inline constexpr double kJumpRelTol = 1e-2;

DiscontinuityReport classify(const ParametricModel& model, double theta_bar);
DiscontinuityReport classify(const ParametricModel& model, double theta_bar, double h);

}  // namespace vrqfi
