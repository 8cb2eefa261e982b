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
#include <string_view>
#include <utility>
#include <vector>

#include "vrqfi/linalg.hpp"
#include "vrqfi/parametric_model.hpp"

// The model zoo: diagonal qubit families, and GHZ states of N qubits under
// a sigma_z frequency term with independent transverse (sigma_x) noise.
namespace vrqfi {

// p |0><0| + (1 - p) |1><1|, p in [0, 1].
DensityMatrix classical_bit_state(double p);
ParametricModel classical_bit_model();

// sin^2(theta) |0><0| + cos^2(theta) |1><1|, theta in [0, pi/2].
DensityMatrix trig_model_state(double theta);
ParametricModel trig_model();

// Closed-form coefficients of the single-qubit channel, valid for |theta| < kappa/2.
struct GhzCoefficients {
  double a = 1.0, d = 0.0, b = 1.0, f = 0.0, c = 0.0;
};
GhzCoefficients ghz_coefficients(double theta, double kappa, double t);

// d/dtheta of (b, f, c); a and d do not depend on theta.
struct GhzCoefficientDerivatives {
  double b = 0.0, f = 0.0, c = 0.0;
};
GhzCoefficientDerivatives ghz_coefficient_derivatives(double theta, double kappa, double t);

// Matrix elements for a bit string of weight m: the diagonal rho_{m,m} and
// the cross-diagonal <s|rho|s-bar> = rho_{m,N-m}, with its theta-derivative.
struct GhzElement {
  double diagonal = 0.0;
  cplx cross{};
  cplx d_cross{};
};
GhzElement ghz_element(int n_qubits, int m, double theta, double kappa, double t);

std::uint64_t binomial(int n, int k);

struct GhzBlock {
  int m = 0;
  std::uint64_t multiplicity = 0;
  Eigen::Matrix2cd sigma;
  Eigen::Matrix2cd d_sigma;
};

struct GhzBlockSet {
  int n_qubits = 0;
  GhzCoefficients coefficients;
  std::vector<GhzBlock> blocks;  // m = 0 .. floor(N/2)

  double weighted_trace() const;
};

inline constexpr int kMaxGhzQubits = 24;
inline constexpr int kMaxDenseQubits = 10;

GhzBlockSet ghz_blocks(int n_qubits, double theta, double kappa, double t);

// Computational-basis index pairs (s, s-bar) grouped by m = bit sum of s,
// ascending, lexicographic in s within a group. s is the lower-weight member
// of its pair; for m = N/2 it is the member with the top bit clear. Group m
// holds exactly multiplicity(m) pairs, so block m of ghz_blocks maps onto it.
std::vector<std::pair<std::uint64_t, std::uint64_t>> ghz_basis_pairs(int n_qubits);

// Full 2^N x 2^N state (and derivative) from the block set; N <= 10.
CMatrix assemble_ghz(const GhzBlockSet& set);
CMatrix assemble_ghz_derivative(const GhzBlockSet& set);

struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;
  double norm() const;
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
};

// Qubit QFI from the Bloch vector. A state with 1 - |v|^2 < 1e-12 takes the
// pure branch |dv|^2, or -v.d2v when `continuous_limit` is set.
double qubit_bloch_qfi(const BlochVector& v, const BlochVector& dv,
                       const std::optional<BlochVector>& d2v = std::nullopt,
                       bool continuous_limit = false);

// QFI of the N-qubit GHZ model evaluated exactly at theta = 0.
double ghz_qfi_discontinuous(int n_qubits, double kappa, double t);

// lim_{theta -> 0} of the QFI of the N-qubit GHZ model, closed form.
double ghz_qfi_continuous(int n_qubits, double kappa, double t);

// GHZ family with parameter theta on (-kappa/2, kappa/2); N = 1 is the
// transverse-noise qubit starting from |+>.
ParametricModel ghz_model(int n_qubits, double kappa, double t);
ParametricModel transverse_qubit_model(double kappa, double t);

// Registry: "classical-bit", "trig", "transverse-qubit", "ghz".
ParametricModel make_model(std::string_view name, const ModelContext& context = {});
const std::vector<std::string>& registered_models();

}  // namespace vrqfi
