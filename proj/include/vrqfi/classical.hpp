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
#include <string>
#include <string_view>
#include <vector>

#include "vrqfi/linalg.hpp"
#include "vrqfi/parametric_model.hpp"

namespace vrqfi {

// Finite discrete distribution. Probabilities within 1e-12 below zero are
// clamped to zero; the total must be 1 within 1e-10.
class Distribution {
 public:
  Distribution(std::vector<std::string> outcomes, std::vector<double> probs,
               double support_tol = kSupportTol);

  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::vector<double>& probs() const { return probs_; }
  double support_tol() const { return support_tol_; }
  std::size_t size() const { return probs_.size(); }

  bool in_support(std::size_t i) const { return probs_[i] > support_tol_; }
  // Throws invalid_input for an unknown label.
  std::size_t index_of(std::string_view label) const;

 private:
  std::vector<std::string> outcomes_;
  std::vector<double> probs_;
  double support_tol_;
};

// Outcomes "0" and "1" with probabilities p and 1 - p.
Distribution bernoulli(double p);

struct FisherInformation {
  double value = 0.0;
  // Outcomes outside the support whose derivative is still > 1e-6: the
  // signature of a second-kind discontinuity.
  std::vector<std::string> singular_outcomes;
  bool singular() const { return !singular_outcomes.empty(); }
};

// Sum of dp^2 / p over the support. `dp` must sum to 0 within 1e-8.
FisherInformation fisher_information(const Distribution& p, const std::vector<double>& dp);

// Kullback-Leibler divergence D(p || q); +infinity when supp(p) is not
// contained in supp(q).
double kl_divergence(const Distribution& p, const Distribution& q);

enum class DiscontinuityKind { continuous, jump, second_kind };
std::string_view to_string(DiscontinuityKind kind);

struct ParametricDistribution {
  std::string name;
  Domain domain;
  std::function<Distribution(double)> at;
};

struct ClassicalDiscontinuityReport {
  double theta_bar = 0.0;
  std::string outcome;
  double speed = 0.0;
  double acceleration = 0.0;
  DiscontinuityKind kind = DiscontinuityKind::continuous;
  double delta_f = 0.0;  // 2a for a jump, +infinity for the second kind
  // [dp]^2 / p at the sample closest to theta_bar; second kind only.
  double divergence_rate = 0.0;
  std::string note;
};

inline constexpr double kSpeedTol = 1e-6;
inline constexpr double kAccelerationTol = 1e-6;

ClassicalDiscontinuityReport classical_discontinuity(const ParametricDistribution& family,
                                                     double theta_bar,
                                                     std::string_view vanishing_outcome,
                                                     double h = 1e-4);

}  // namespace vrqfi
