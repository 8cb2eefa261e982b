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

#include <optional>

#include "vrqfi/kernels/kernels.hpp"
#include "vrqfi/linalg.hpp"

namespace vrqfi {

// (|0...0> + |1...1>) / sqrt(2) as a density matrix.
CMatrix ghz_initial_state(int n_qubits);

// 1e-4 * min(1, 1/kappa).
double default_lindblad_dt(double kappa);

struct LindbladOptions {
  std::optional<kernels::Isa> isa;  // defaults to kernels::best_isa()
};

/// Integrates
///   d rho/dt = -i (theta/2) sum_j [sigma_z^(j), rho]
///              + (kappa/2) (sum_j sigma_x^(j) rho sigma_x^(j) - N rho)
/// from the GHZ state with classical RK4 at a fixed step (t_final split into
/// ceil(t_final/dt) equal steps). After each step the state is made
/// Hermitian and its trace reset to 1; a trace drift above 1e-8 before the
/// reset throws step_size. N <= 10.
DensityMatrix lindblad_integrate(int n_qubits, double theta, double kappa, double t_final,
                                 double dt, const LindbladOptions& options = {});

}  // namespace vrqfi
