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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vrqfi/classical.hpp"
#include "vrqfi/linalg.hpp"
#include "vrqfi/parametric_model.hpp"

namespace vrqfi {

inline constexpr double kProjectorTol = 1e-10;

class ProjectiveMeasurement {
 public:
  // Throws invalid_input unless every projector is Hermitian and idempotent
  // and they sum to the identity (all within 1e-10).
  ProjectiveMeasurement(std::vector<CMatrix> projectors, std::vector<std::string> labels);

  const std::vector<CMatrix>& projectors() const { return projectors_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t dim() const { return static_cast<std::size_t>(projectors_.front().rows()); }
  std::size_t size() const { return projectors_.size(); }

 private:
  std::vector<CMatrix> projectors_;
  std::vector<std::string> labels_;
};

// Labels "0", "1".
ProjectiveMeasurement computational_basis();
// Labels "+", "-".
ProjectiveMeasurement sigma_x_basis();

// computational_basis for classical-bit and trig, sigma_x_basis for
// transverse-qubit; anything else is unsupported.
ProjectiveMeasurement canonical_measurement(const ParametricModel& model);

Distribution born_probabilities(const DensityMatrix& rho, const ProjectiveMeasurement& meas);

// Stream derivation for replicate r of a run seeded with `seed`.
std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t replicate);

/// Draws M outcomes by inverse-CDF sampling from std::mt19937_64 seeded with
/// `seed`; each draw uses u = (next() >> 11) * 2^-53 and picks the first k
/// with u < cdf[k]. Returns one count per outcome.
std::vector<std::uint64_t> sample_outcomes(const Distribution& dist, std::uint64_t M,
                                           std::uint64_t seed);

struct MleResult {
  double estimate = 0.0;
  bool at_boundary = false;
};

inline constexpr double kGoldenTol = 1e-8;

/// Closed forms for classical-bit and trig; golden-section search over
/// `bracket` (default [0, kappa/2)) for transverse-qubit. The interior
/// optimum is compared with both bracket ends; an end that is at least as
/// likely wins and sets at_boundary.
MleResult mle(const ParametricModel& model, const std::vector<std::uint64_t>& counts,
              std::optional<std::pair<double, double>> bracket = std::nullopt);

struct EstimationReport {
  std::string model;
  double theta_true = 0.0;
  std::uint64_t samples = 0;     // M
  std::uint64_t replicates = 0;  // R
  std::uint64_t seed = 0;
  std::vector<double> estimates;
  double mean = 0.0;
  double sample_variance = 0.0;
  double qfi = 0.0;                   // fixed-rank QFI at theta_true
  std::optional<double> qfi_limit;    // +inf when the one-sided limit diverges
  std::optional<double> cr_bound;     // empty: not applicable (QFI vanishes)
  double variance_threshold = 0.0;    // cr_bound - 3 * sqrt(2 s^4 / (R - 1))
  bool violated = false;
  std::uint64_t boundary_solutions = 0;
  std::vector<std::string> notes;
};

inline constexpr double kVanishingQfi = 1e-12;

EstimationReport run_cr_experiment(const ParametricModel& model, double theta_true,
                                   const ProjectiveMeasurement& meas, std::uint64_t M,
                                   std::uint64_t R, std::uint64_t seed);

}  // namespace vrqfi
