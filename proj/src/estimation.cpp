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

#include "vrqfi/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "vrqfi/errors.hpp"
#include "vrqfi/quantum.hpp"

namespace vrqfi {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double log_likelihood(const Distribution& p, const std::vector<std::uint64_t>& counts) {
  double ll = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    if (p.probs()[k] <= 0.0) return -kInf;
    ll += double(counts[k]) * std::log(p.probs()[k]);
  }
  return ll;
}

bool same_measurement(const ProjectiveMeasurement& a, const ProjectiveMeasurement& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((a.projectors()[k] - b.projectors()[k]).cwiseAbs().maxCoeff() > kProjectorTol) {
      return false;
    }
  }
  return true;
}

std::size_t rank_at(const ParametricModel& model, double theta) {
  return spectral_decompose(model.state(theta)).effective_rank;
}

}  // namespace

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<CMatrix> projectors,
                                             std::vector<std::string> labels)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty() || projectors_.size() != labels_.size()) {
    throw Error(ErrorKind::invalid_input, "need one label per projector");
  }
  const Eigen::Index n = projectors_.front().rows();
  CMatrix sum = CMatrix::Zero(n, n);
  for (const CMatrix& p : projectors_) {
    if (p.rows() != n || p.cols() != n) {
      throw Error(ErrorKind::invalid_input, "projectors must share one square shape");
    }
    if (hermiticity_defect(p) > kProjectorTol ||
        (p * p - p).cwiseAbs().maxCoeff() > kProjectorTol) {
      throw Error(ErrorKind::invalid_input, "projector is not Hermitian idempotent");
    }
    sum += p;
  }
  if ((sum - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > kProjectorTol) {
    throw Error(ErrorKind::invalid_input, "projectors do not sum to the identity");
  }
}

ProjectiveMeasurement computational_basis() {
  CMatrix p0 = CMatrix::Zero(2, 2), p1 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return ProjectiveMeasurement({p0, p1}, {"0", "1"});
}

ProjectiveMeasurement sigma_x_basis() {
  CMatrix plus(2, 2), minus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  minus << 0.5, -0.5, -0.5, 0.5;
  return ProjectiveMeasurement({plus, minus}, {"+", "-"});
}

ProjectiveMeasurement canonical_measurement(const ParametricModel& model) {
  if (model.name() == "classical-bit" || model.name() == "trig") return computational_basis();
  if (model.name() == "transverse-qubit") return sigma_x_basis();
  throw Error(ErrorKind::unsupported, "no canonical measurement for '" + model.name() + "'");
}

Distribution born_probabilities(const DensityMatrix& rho, const ProjectiveMeasurement& meas) {
  if (rho.dim() != meas.dim()) {
    throw Error(ErrorKind::invalid_input, "measurement and state dimensions differ");
  }
  std::vector<double> p;
  double total = 0.0;
  for (const CMatrix& proj : meas.projectors()) {
    p.push_back(std::clamp((proj * rho.matrix()).trace().real(), 0.0, 1.0));
    total += p.back();
  }
  for (double& x : p) x /= total;
  return Distribution(meas.labels(), std::move(p));
}

std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t replicate) {
  return splitmix64(splitmix64(seed) ^ replicate);
}

std::vector<std::uint64_t> sample_outcomes(const Distribution& dist, std::uint64_t M,
                                           std::uint64_t seed) {
  if (M < 1) throw Error(ErrorKind::invalid_input, "need at least one sample");
  std::vector<double> cdf(dist.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) cdf[k] = acc += dist.probs()[k];
  cdf.back() = 1.0;

  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> counts(dist.size(), 0);
  for (std::uint64_t i = 0; i < M; ++i) {
    const double u = double(gen() >> 11) * 0x1.0p-53;
    std::size_t k = 0;
    while (!(u < cdf[k])) ++k;
    ++counts[k];
  }
  return counts;
}

MleResult mle(const ParametricModel& model, const std::vector<std::uint64_t>& counts,
              std::optional<std::pair<double, double>> bracket) {
  if (counts.size() != 2) throw Error(ErrorKind::invalid_input, "expected two outcome counts");
  const std::uint64_t total = counts[0] + counts[1];
  if (total == 0) throw Error(ErrorKind::invalid_input, "no samples");
  const double freq0 = double(counts[0]) / double(total);

  if (model.name() == "classical-bit") {
    return {freq0, counts[0] == 0 || counts[1] == 0};
  }
  if (model.name() == "trig") {
    return {std::asin(std::sqrt(freq0)), counts[0] == 0 || counts[1] == 0};
  }
  if (model.name() != "transverse-qubit") {
    throw Error(ErrorKind::unsupported, "no estimator for '" + model.name() + "'");
  }

  const double kappa = model.context().kappa;
  auto [lo, hi] = bracket.value_or(std::pair{0.0, 0.5 * kappa * (1.0 - 1e-6)});
  if (!(lo < hi) || !model.domain().contains(lo) || !model.domain().contains(hi)) {
    throw Error(ErrorKind::domain, "MLE bracket must be increasing and inside the domain");
  }
  const ProjectiveMeasurement meas = sigma_x_basis();
  auto ll = [&](double theta) {
    return log_likelihood(born_probabilities(model.state(theta), meas), counts);
  };

  // Golden-section maximization.
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
  double f1 = ll(x1), f2 = ll(x2);
  while (b - a > kGoldenTol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = ll(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = ll(x1);
    }
  }
  MleResult best{0.5 * (a + b), false};
  double f_best = ll(best.estimate);
  for (double edge : {lo, hi}) {
    const double f = ll(edge);
    if (f >= f_best) {
      best = {edge, true};
      f_best = f;
    }
  }
  return best;
}

EstimationReport run_cr_experiment(const ParametricModel& model, double theta_true,
                                   const ProjectiveMeasurement& meas, std::uint64_t M,
                                   std::uint64_t R, std::uint64_t seed) {
  if (R < 2) throw Error(ErrorKind::insufficient_replicates, "need at least two replicates");
  if (M < 1) throw Error(ErrorKind::invalid_input, "need at least one sample per replicate");
  if (!same_measurement(meas, canonical_measurement(model))) {
    throw Error(ErrorKind::unsupported,
                "estimators are implemented for the canonical measurement only");
  }

  EstimationReport r;
  r.model = model.name();
  r.theta_true = theta_true;
  r.samples = M;
  r.replicates = R;
  r.seed = seed;

  const DensityMatrix rho = model.state(theta_true);
  const Distribution dist = born_probabilities(rho, meas);

  // Welford: identical estimates give a variance of exactly zero.
  double mean = 0.0, m2 = 0.0;
  r.estimates.reserve(R);
  for (std::uint64_t i = 0; i < R; ++i) {
    const MleResult est = mle(model, sample_outcomes(dist, M, replicate_seed(seed, i)));
    r.estimates.push_back(est.estimate);
    if (est.at_boundary) ++r.boundary_solutions;
    const double delta = est.estimate - mean;
    mean += delta / double(i + 1);
    m2 += delta * (est.estimate - mean);
  }
  r.mean = mean;
  r.sample_variance = m2 / double(R - 1);

  r.qfi = qfi(rho, model.derivative(theta_true));
  const Domain& dom = model.domain();
  for (Side side : {Side::above, Side::below}) {
    const double step = 1e-2 * double(static_cast<int>(side));
    if (!dom.contains(theta_true + step)) continue;
    try {
      r.qfi_limit = qfi_limit(model, theta_true, side).value;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::divergence) throw;
      r.qfi_limit = kInf;
    }
    break;
  }

  const std::size_t rank = spectral_decompose(rho).effective_rank;
  for (double step : {1e-3, -1e-3}) {
    if (dom.contains(theta_true + step) && rank_at(model, theta_true + step) != rank) {
      r.notes.push_back(
          "model rank changes at theta_true; the Cramer-Rao bound's regularity "
          "hypotheses fail here");
      break;
    }
  }

  const double se = r.sample_variance * std::sqrt(2.0 / double(R - 1));
  if (r.qfi <= kVanishingQfi) {
    r.cr_bound.reset();
    r.variance_threshold = kInf;
    r.violated = true;
    r.notes.push_back("QFI vanishes at theta_true: bound not applicable (infinite)");
  } else {
    r.cr_bound = 1.0 / (double(M) * r.qfi);
    r.variance_threshold = *r.cr_bound - 3.0 * se;
    r.violated = r.sample_variance < r.variance_threshold;
  }
  if (r.sample_variance == 0.0) r.notes.push_back("zero variance: every replicate agrees");
  return r;
}

}  // namespace vrqfi
