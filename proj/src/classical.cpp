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

#include "vrqfi/classical.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "vrqfi/errors.hpp"
#include "vrqfi/finite_difference.hpp"

namespace vrqfi {

Distribution::Distribution(std::vector<std::string> outcomes, std::vector<double> probs,
                           double support_tol)
    : outcomes_(std::move(outcomes)), probs_(std::move(probs)), support_tol_(support_tol) {
  if (outcomes_.size() != probs_.size() || probs_.empty()) {
    throw Error(ErrorKind::invalid_input, "distribution needs one probability per outcome");
  }
  double total = 0.0;
  for (double& p : probs_) {
    if (!std::isfinite(p) || p < -1e-12) {
      throw Error(ErrorKind::invalid_input, "negative or non-finite probability");
    }
    if (p < 0.0) p = 0.0;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw Error(ErrorKind::invalid_input,
                "probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

std::size_t Distribution::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (outcomes_[i] == label) return i;
  }
  throw Error(ErrorKind::invalid_input, "unknown outcome '" + std::string(label) + "'");
}

Distribution bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::domain, "Bernoulli parameter outside [0, 1]");
  return Distribution({"0", "1"}, {p, 1.0 - p});
}

FisherInformation fisher_information(const Distribution& p, const std::vector<double>& dp) {
  if (dp.size() != p.size()) {
    throw Error(ErrorKind::invalid_input, "derivative length differs from outcome count");
  }
  const double total = std::accumulate(dp.begin(), dp.end(), 0.0);
  if (std::abs(total) > 1e-8) {
    throw Error(ErrorKind::invalid_input, "derivative of a normalized family must sum to 0");
  }
  FisherInformation out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.in_support(i)) {
      out.value += dp[i] * dp[i] / p.probs()[i];
    } else if (std::abs(dp[i]) > 1e-6) {
      out.singular_outcomes.push_back(p.outcomes()[i]);
    }
  }
  return out;
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  if (p.outcomes() != q.outcomes()) {
    throw Error(ErrorKind::invalid_input, "KL divergence needs identical outcome sets");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.in_support(i)) continue;
    if (!q.in_support(i)) return std::numeric_limits<double>::infinity();
    d += p.probs()[i] * std::log(p.probs()[i] / q.probs()[i]);
  }
  return std::max(d, 0.0);
}

std::string_view to_string(DiscontinuityKind kind) {
  switch (kind) {
    case DiscontinuityKind::continuous: return "continuous";
    case DiscontinuityKind::jump: return "jump";
    case DiscontinuityKind::second_kind: return "second-kind";
  }
  return "unknown";
}

ClassicalDiscontinuityReport classical_discontinuity(const ParametricDistribution& family,
                                                     double theta_bar,
                                                     std::string_view vanishing_outcome,
                                                     double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::invalid_input, "step must be positive");
  if (!family.domain.contains(theta_bar)) {
    throw Error(ErrorKind::domain, family.name + ": theta_bar outside domain");
  }
  const std::size_t idx = family.at(theta_bar).index_of(vanishing_outcome);
  auto prob = [&](double theta) { return family.at(theta).probs()[idx]; };

  const bool up = family.domain.contains(theta_bar + h);
  const bool down = family.domain.contains(theta_bar - h);
  if (!up && !down) throw Error(ErrorKind::domain, "no room for finite differences at theta_bar");

  const double p0 = prob(theta_bar);
  for (double dir : {1.0, -1.0}) {
    if ((dir > 0 && !up) || (dir < 0 && !down)) continue;
    const double p1 = prob(theta_bar + dir * h);
    const double p2 = prob(theta_bar + dir * 0.5 * h);
    const double p4 = prob(theta_bar + dir * 0.25 * h);
    if (p0 > 1e-10 || !(p1 >= p2 && p2 >= p4 && p4 >= p0) || !(p1 > p0)) {
      throw Error(ErrorKind::misidentified_outcome,
                  "probability of '" + std::string(vanishing_outcome) +
                      "' does not decrease to zero at theta_bar");
    }
  }

  const double dir = up ? 1.0 : -1.0;
  const Derivatives d = (up && down) ? central_derivatives(prob, theta_bar, h)
                                     : one_sided_derivatives(prob, theta_bar, h, dir);

  ClassicalDiscontinuityReport r;
  r.theta_bar = theta_bar;
  r.outcome = std::string(vanishing_outcome);
  r.speed = d.first;
  r.acceleration = d.second;
  if (std::abs(r.speed) >= kSpeedTol) {
    r.kind = DiscontinuityKind::second_kind;
    r.delta_f = std::numeric_limits<double>::infinity();
    const double near = theta_bar + dir * 0.25 * h;
    const double delta = h / 16.0;
    const double slope = (prob(near + delta) - prob(near - delta)) / (2.0 * delta);
    r.divergence_rate = slope * slope / prob(near);
  } else if (std::abs(r.acceleration) >= kAccelerationTol) {
    r.kind = DiscontinuityKind::jump;
    r.delta_f = 2.0 * r.acceleration;
  } else {
    r.kind = DiscontinuityKind::continuous;
    r.delta_f = 0.0;
    r.note = "continuous (order > 2)";
  }
  return r;
}

}  // namespace vrqfi
