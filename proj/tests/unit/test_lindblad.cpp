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

#include <doctest.h>

#include "helpers.hpp"
#include "vrqfi/lindblad.hpp"
#include "vrqfi/models.hpp"

using namespace vrqfi;
using testing::max_abs;
using testing::thrown_kind;

TEST_CASE("integrator matches the closed-form blocks") {
  for (int n = 1; n <= 4; ++n) {
    const double theta = 0.21, kappa = 0.9, t = 0.7;
    const DensityMatrix rho = lindblad_integrate(n, theta, kappa, t, 1e-3);
    CHECK(max_abs(rho.matrix() - assemble_ghz(ghz_blocks(n, theta, kappa, t))) < 1e-10);
  }
}

TEST_CASE("integrator variants agree") {
  for (kernels::Isa isa : kernels::available_isas()) {
    const DensityMatrix a = lindblad_integrate(3, -0.3, 1.1, 0.5, 1e-3, {kernels::Isa::scalar});
    const DensityMatrix b = lindblad_integrate(3, -0.3, 1.1, 0.5, 1e-3, {isa});
    CHECK(max_abs(a.matrix() - b.matrix()) < 1e-13);
  }
}

TEST_CASE("integrator edge cases") {
  CHECK(max_abs(lindblad_integrate(2, 0.3, 1.0, 0.0, 1e-3).matrix() - ghz_initial_state(2)) == 0.0);
  // Without noise the state stays pure.
  const DensityMatrix pure = lindblad_integrate(2, 0.4, 0.0, 1.0, 1e-3);
  CHECK(std::abs((pure.matrix() * pure.matrix()).trace().real() - 1.0) < 1e-10);
  CHECK(default_lindblad_dt(4.0) == doctest::Approx(2.5e-5));
  CHECK(default_lindblad_dt(0.5) == doctest::Approx(1e-4));
  CHECK(thrown_kind([] { lindblad_integrate(11, 0.0, 1.0, 1.0, 1e-3); }) == ErrorKind::domain);
  CHECK(thrown_kind([] { lindblad_integrate(2, 0.0, 1.0, 1.0, 0.0); }) == ErrorKind::invalid_input);
  CHECK(thrown_kind([] { lindblad_integrate(2, 0.0, 1.0, -1.0, 1e-3); }) == ErrorKind::domain);
  // A step far beyond RK4 stability blows the trace up.
  CHECK(thrown_kind([] { lindblad_integrate(2, 0.0, 50.0, 2.0, 0.5); }) == ErrorKind::step_size);
}
