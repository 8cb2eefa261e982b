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

#include "vrqfi/models.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "vrqfi/errors.hpp"

namespace vrqfi {
namespace {

template <typename T>
T ipow(T base, int n) {
  T r{1};
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

CMatrix diag2(double p0, double p1) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = p0;
  m(1, 1) = p1;
  return m;
}

void check_ghz_args(int n_qubits, double theta, double kappa, double t) {
  if (n_qubits < 1 || n_qubits > kMaxGhzQubits) {
    throw Error(ErrorKind::domain, "GHZ qubit count must lie in [1, 24]");
  }
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw Error(ErrorKind::domain, "kappa must be positive");
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorKind::domain, "time must be non-negative");
  if (!(std::abs(theta) < 0.5 * kappa)) {
    throw Error(ErrorKind::domain, "|theta| must stay below kappa/2 for real coefficients");
  }
}

Domain ghz_domain(double kappa) { return {-0.5 * kappa, 0.5 * kappa, false, false}; }

}  // namespace

DensityMatrix classical_bit_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::domain, "p must lie in [0, 1]");
  return DensityMatrix(diag2(p, 1.0 - p));
}

ParametricModel classical_bit_model() {
  return ParametricModel(
      "classical-bit", 2, Domain{0.0, 1.0, true, true},
      [](double p) { return diag2(p, 1.0 - p); }, [](double) { return diag2(1.0, -1.0); });
}

DensityMatrix trig_model_state(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
    throw Error(ErrorKind::domain, "theta must lie in [0, pi/2]");
  }
  const double s = std::sin(theta), c = std::cos(theta);
  return DensityMatrix(diag2(s * s, c * c));
}

ParametricModel trig_model() {
  return ParametricModel(
      "trig", 2, Domain{0.0, std::numbers::pi / 2, true, true},
      [](double th) {
        const double s = std::sin(th), c = std::cos(th);
        return diag2(s * s, c * c);
      },
      [](double th) {
        const double s2 = std::sin(2.0 * th);
        return diag2(s2, -s2);
      });
}

GhzCoefficients ghz_coefficients(double theta, double kappa, double t) {
  check_ghz_args(1, theta, kappa, t);
  const double decay = std::exp(-kappa * t);
  const double env = std::exp(-0.5 * kappa * t);
  const double xi = std::sqrt(kappa * kappa - 4.0 * theta * theta);
  const double sh = std::sinh(0.5 * xi * t);
  GhzCoefficients k;
  k.a = 0.5 * (1.0 + decay);
  k.d = 0.5 * (1.0 - decay);
  k.b = env * std::cosh(0.5 * xi * t);
  k.f = kappa * env * sh / xi;
  k.c = 2.0 * theta * env * sh / xi;
  return k;
}

GhzCoefficientDerivatives ghz_coefficient_derivatives(double theta, double kappa, double t) {
  check_ghz_args(1, theta, kappa, t);
  const double env = std::exp(-0.5 * kappa * t);
  const double xi = std::sqrt(kappa * kappa - 4.0 * theta * theta);
  const double dxi = -4.0 * theta / xi;
  const double sh = std::sinh(0.5 * xi * t), ch = std::cosh(0.5 * xi * t);
  // d/dxi of sinh(xi t / 2) / xi
  const double dsinc = 0.5 * t * ch / xi - sh / (xi * xi);
  GhzCoefficientDerivatives d;
  d.b = env * sh * 0.5 * t * dxi;
  d.f = kappa * env * dsinc * dxi;
  d.c = 2.0 * env * sh / xi + 2.0 * theta * env * dsinc * dxi;
  return d;
}

GhzElement ghz_element(int n_qubits, int m, double theta, double kappa, double t) {
  check_ghz_args(n_qubits, theta, kappa, t);
  if (m < 0 || m > n_qubits) throw Error(ErrorKind::invalid_input, "weight m outside [0, N]");
  const GhzCoefficients k = ghz_coefficients(theta, kappa, t);
  const GhzCoefficientDerivatives dk = ghz_coefficient_derivatives(theta, kappa, t);
  const int n = n_qubits;
  const cplx minus{k.b, -k.c}, plus{k.b, k.c};
  const cplx dminus{dk.b, -dk.c}, dplus{dk.b, dk.c};

  GhzElement e;
  e.diagonal = 0.5 * (ipow(k.d, m) * ipow(k.a, n - m) + ipow(k.d, n - m) * ipow(k.a, m));
  e.cross = 0.5 * (ipow(k.f, m) * ipow(minus, n - m) + ipow(k.f, n - m) * ipow(plus, m));

  cplx d{};
  if (m > 0) d += double(m) * ipow(k.f, m - 1) * dk.f * ipow(minus, n - m);
  if (n - m > 0) d += ipow(k.f, m) * double(n - m) * ipow(minus, n - m - 1) * dminus;
  if (n - m > 0) d += double(n - m) * ipow(k.f, n - m - 1) * dk.f * ipow(plus, m);
  if (m > 0) d += ipow(k.f, n - m) * double(m) * ipow(plus, m - 1) * dplus;
  e.d_cross = 0.5 * d;
  return e;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

double GhzBlockSet::weighted_trace() const {
  double s = 0.0;
  for (const auto& b : blocks) s += static_cast<double>(b.multiplicity) * b.sigma.trace().real();
  return s;
}

GhzBlockSet ghz_blocks(int n_qubits, double theta, double kappa, double t) {
  check_ghz_args(n_qubits, theta, kappa, t);
  GhzBlockSet set;
  set.n_qubits = n_qubits;
  set.coefficients = ghz_coefficients(theta, kappa, t);
  for (int m = 0; m <= n_qubits / 2; ++m) {
    const GhzElement e = ghz_element(n_qubits, m, theta, kappa, t);
    GhzBlock b;
    b.m = m;
    b.multiplicity = binomial(n_qubits, m);
    if (2 * m == n_qubits) b.multiplicity /= 2;
    b.sigma << e.diagonal, e.cross, std::conj(e.cross), e.diagonal;
    b.d_sigma << 0.0, e.d_cross, std::conj(e.d_cross), 0.0;
    set.blocks.push_back(b);
  }
  return set;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ghz_basis_pairs(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxGhzQubits) {
    throw Error(ErrorKind::domain, "GHZ qubit count must lie in [1, 24]");
  }
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  const std::uint64_t all = dim - 1;
  const std::uint64_t top = dim >> 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  pairs.reserve(dim / 2);
  for (int m = 0; m <= n_qubits / 2; ++m) {
    for (std::uint64_t s = 0; s < dim; ++s) {
      if (std::popcount(s) != m) continue;
      if (2 * m == n_qubits && (s & top)) continue;
      pairs.emplace_back(s, s ^ all);
    }
  }
  return pairs;
}

namespace {

CMatrix assemble(const GhzBlockSet& set, bool derivative) {
  if (set.n_qubits < 1 || set.n_qubits > kMaxDenseQubits) {
    throw Error(ErrorKind::domain, "dense GHZ assembly supports at most 10 qubits");
  }
  const auto dim = Eigen::Index{1} << set.n_qubits;
  CMatrix rho = CMatrix::Zero(dim, dim);
  const auto pairs = ghz_basis_pairs(set.n_qubits);
  std::size_t next = 0;
  for (const auto& b : set.blocks) {
    const Eigen::Matrix2cd& blk = derivative ? b.d_sigma : b.sigma;
    for (std::uint64_t r = 0; r < b.multiplicity; ++r, ++next) {
      const auto s = static_cast<Eigen::Index>(pairs[next].first);
      const auto sb = static_cast<Eigen::Index>(pairs[next].second);
      rho(s, s) = blk(0, 0);
      rho(s, sb) = blk(0, 1);
      rho(sb, s) = blk(1, 0);
      rho(sb, sb) = blk(1, 1);
    }
  }
  return rho;
}

}  // namespace

CMatrix assemble_ghz(const GhzBlockSet& set) { return assemble(set, false); }
CMatrix assemble_ghz_derivative(const GhzBlockSet& set) { return assemble(set, true); }

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double qubit_bloch_qfi(const BlochVector& v, const BlochVector& dv,
                       const std::optional<BlochVector>& d2v, bool continuous_limit) {
  const double norm2 = v.dot(v);
  if (std::sqrt(norm2) > 1.0 + 1e-10) {
    throw Error(ErrorKind::invalid_input, "Bloch vector longer than 1");
  }
  const double mixedness = 1.0 - norm2;
  if (mixedness < 1e-12) {
    if (!continuous_limit) return dv.dot(dv);
    if (!d2v) throw Error(ErrorKind::invalid_input, "continuous limit needs the second derivative");
    return -v.dot(*d2v);
  }
  const double proj = dv.dot(v);
  return dv.dot(dv) + proj * proj / mixedness;
}

double ghz_qfi_discontinuous(int n_qubits, double kappa, double t) {
  check_ghz_args(n_qubits, 0.0, kappa, t);
  double q = 0.0;
  for (int m = 0; m <= n_qubits; ++m) {
    const GhzElement e = ghz_element(n_qubits, m, 0.0, kappa, t);
    if (!(e.diagonal > 0.0)) continue;
    q += static_cast<double>(binomial(n_qubits, m)) * std::norm(e.d_cross) / e.diagonal;
  }
  return q;
}

double ghz_qfi_continuous(int n_qubits, double kappa, double t) {
  check_ghz_args(n_qubits, 0.0, kappa, t);
  const double n = n_qubits;
  const double decay = std::exp(-kappa * t);
  const double one_minus = -std::expm1(-kappa * t);
  const double two_minus = 2.0 - decay;
  return (n * n * one_minus * one_minus + n * (2.0 * kappa * t + 1.0 - two_minus * two_minus)) /
         (kappa * kappa);
}

ParametricModel ghz_model(int n_qubits, double kappa, double t) {
  if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
    throw Error(ErrorKind::domain, "dense GHZ model supports 1 to 10 qubits");
  }
  check_ghz_args(n_qubits, 0.0, kappa, t);
  const auto dim = std::size_t{1} << n_qubits;
  ModelContext ctx{kappa, t, n_qubits};
  return ParametricModel(
      n_qubits == 1 ? "transverse-qubit" : "ghz", dim, ghz_domain(kappa),
      [=](double th) { return assemble_ghz(ghz_blocks(n_qubits, th, kappa, t)); },
      [=](double th) { return assemble_ghz_derivative(ghz_blocks(n_qubits, th, kappa, t)); }, ctx);
}

ParametricModel transverse_qubit_model(double kappa, double t) { return ghz_model(1, kappa, t); }

ParametricModel make_model(std::string_view name, const ModelContext& context) {
  if (name == "classical-bit") return classical_bit_model();
  if (name == "trig") return trig_model();
  if (name == "transverse-qubit") return transverse_qubit_model(context.kappa, context.time);
  if (name == "ghz") return ghz_model(context.qubits, context.kappa, context.time);
  throw Error(ErrorKind::unsupported, "unknown model '" + std::string(name) + "'");
}

const std::vector<std::string>& registered_models() {
  static const std::vector<std::string> names{"classical-bit", "trig", "transverse-qubit", "ghz"};
  return names;
}

}  // namespace vrqfi
