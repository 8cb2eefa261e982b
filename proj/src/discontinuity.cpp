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

#include "vrqfi/discontinuity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vrqfi/errors.hpp"
#include "vrqfi/finite_difference.hpp"
#include "vrqfi/linalg.hpp"
#include "vrqfi/quantum.hpp"

namespace vrqfi {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Walks outward from theta_bar along one side, returning (theta, lambda_m).
std::vector<std::pair<double, double>> follow_branch(const ParametricModel& model,
                                                     const SpectralData& at_bar, double theta_bar,
                                                     double h, double dir) {
  const auto dim = static_cast<Eigen::Index>(at_bar.dim());
  const auto rank = static_cast<Eigen::Index>(at_bar.effective_rank);
  const CMatrix kernel = at_bar.eigenvectors.rightCols(dim - rank);

  std::vector<std::pair<double, double>> out;
  CVector previous;
  for (double frac : {0.25, 0.5, 1.0}) {
    const double theta = theta_bar + dir * frac * h;
    const SpectralData s = spectral_decompose(model.state(theta));
    const auto r = static_cast<Eigen::Index>(s.effective_rank);
    if (r == rank) {
      throw Error(ErrorKind::not_a_discontinuity,
                  "effective rank at " + std::to_string(theta) + " equals the rank at theta_bar");
    }
    if (r != rank + 1) {
      throw Error(ErrorKind::multi_branch,
                  "more than one eigenvalue vanishes at theta_bar (rank " + std::to_string(rank) +
                      " vs " + std::to_string(r) + ")");
    }
    Eigen::Index match = -1;
    int candidates = 0;
    double best = 0.0;
    for (Eigen::Index j = 0; j < r; ++j) {
      const CVector u = s.eigenvectors.col(j);
      const double overlap =
          previous.size() == 0 ? (kernel.adjoint() * u).squaredNorm() : std::norm(previous.dot(u));
      if (overlap > kBranchOverlap) {
        ++candidates;
        if (overlap > best) {
          best = overlap;
          match = j;
        }
      }
    }
    if (candidates > 1) {
      throw Error(ErrorKind::multi_branch, "ambiguous eigenvalue branch near theta_bar");
    }
    if (match < 0) {
      throw Error(ErrorKind::numerical,
                  "no eigenvector near " + std::to_string(theta) + " connects to the kernel");
    }
    previous = s.eigenvectors.col(match);
    out.emplace_back(theta, s.eigenvalues[match]);
  }
  return out;
}

}  // namespace

double default_branch_step(double theta_bar) { return 1e-3 * std::max(1.0, std::abs(theta_bar)); }

double EigenvalueBranch::at(double theta) const {
  for (const auto& [t, lambda] : samples) {
    if (t == theta) return lambda;
  }
  throw Error(ErrorKind::invalid_input, "theta " + std::to_string(theta) + " was not sampled");
}

EigenvalueBranch vanishing_eigenvalue_branch(const ParametricModel& model, double theta_bar,
                                             double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::invalid_input, "branch step must be positive");
  const SpectralData at_bar = spectral_decompose(model.state(theta_bar));

  EigenvalueBranch b;
  b.theta_bar = theta_bar;
  b.h = h;
  b.rank_at_bar = at_bar.effective_rank;
  b.above = model.domain().contains(theta_bar + h);
  b.below = model.domain().contains(theta_bar - h);
  if (!b.above && !b.below) {
    throw Error(ErrorKind::domain, "no room for the branch step on either side of theta_bar");
  }
  if (at_bar.effective_rank == at_bar.dim()) {
    throw Error(ErrorKind::not_a_discontinuity, model.name() + " has full rank at theta_bar");
  }

  // Below the support tolerance, so zero by the same convention as the QFI.
  b.samples.emplace_back(theta_bar, 0.0);
  if (b.below) {
    auto s = follow_branch(model, at_bar, theta_bar, h, -1.0);
    b.samples.insert(b.samples.end(), s.begin(), s.end());
  }
  if (b.above) {
    auto s = follow_branch(model, at_bar, theta_bar, h, 1.0);
    b.samples.insert(b.samples.end(), s.begin(), s.end());
  }
  std::sort(b.samples.begin(), b.samples.end());
  return b;
}

DiscontinuityReport classify(const ParametricModel& model, double theta_bar) {
  return classify(model, theta_bar, default_branch_step(theta_bar));
}

DiscontinuityReport classify(const ParametricModel& model, double theta_bar, double h) {
  const EigenvalueBranch branch = vanishing_eigenvalue_branch(model, theta_bar, h);
  auto lambda = [&](double theta) { return branch.at(theta); };
  const Derivatives d =
      (branch.above && branch.below)
          ? central_derivatives(lambda, theta_bar, h)
          : one_sided_derivatives(lambda, theta_bar, h, branch.above ? 1.0 : -1.0);

  DiscontinuityReport r;
  r.theta_bar = theta_bar;
  r.v = d.first;
  r.a = d.second;
  r.qfi_at_bar = qfi(model, theta_bar);

  // The limit ladder starts ten branch steps out.
  const double h_limit = 10.0 * h;
  std::vector<Side> sides;
  if (branch.below && model.domain().contains(theta_bar - h_limit)) sides.push_back(Side::below);
  if (branch.above && model.domain().contains(theta_bar + h_limit)) sides.push_back(Side::above);
  if (sides.empty()) {
    throw Error(ErrorKind::domain, "no room for the QFI limit ladder next to theta_bar");
  }

  if (std::abs(r.v) >= kSpeedTol) {
    r.kind = DiscontinuityKind::second_kind;
    r.delta_Q_predicted = kInf;
    try {
      r.qfi_limit = qfi_limit(model, theta_bar, sides.front(), 6, h_limit).value;
      r.note = "QFI sequence converged although the eigenvalue speed is nonzero";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::divergence) throw;
      r.qfi_limit = kInf;
      r.evidence = e.evidence();
    }
    r.delta_Q_measured = r.qfi_limit - r.qfi_at_bar;
    return r;
  }

  double sum = 0.0, lo = kInf, hi = -kInf;
  for (Side side : sides) {
    const double q = qfi_limit(model, theta_bar, side, 6, h_limit).value;
    sum += q;
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  r.qfi_limit = sum / double(sides.size());
  if (hi - lo > 1e-3 * std::max(1.0, std::abs(r.qfi_limit))) {
    r.note = "one-sided QFI limits differ: " + std::to_string(lo) + " vs " + std::to_string(hi);
  }
  r.delta_Q_measured = r.qfi_limit - r.qfi_at_bar;

  if (std::abs(r.a) >= kAccelerationTol) {
    r.kind = DiscontinuityKind::jump;
    r.delta_Q_predicted = 2.0 * r.a;
  } else {
    r.kind = DiscontinuityKind::continuous;
    r.delta_Q_predicted = 0.0;
    if (r.note.empty()) r.note = "continuous (order > 2)";
  }
  return r;
}

}  // namespace vrqfi
