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
#include <vector>

#include "vrqfi/errors.hpp"
#include "vrqfi/parametric_model.hpp"

namespace vrqfi::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kNumerical = 3,
  kExpectationMismatch = 4,
  kNotADiscontinuity = 5,
};

int exit_code_for(ErrorKind kind);

enum class Format { csv, json };
Format parse_format(std::string_view s);

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  bool log = false;

  std::vector<double> values() const;
};

// "start:stop:points[:log]"; throws invalid_input.
Grid parse_grid(std::string_view spec);

struct CommandResult {
  int exit_code = kOk;
  std::string output;       // table or JSON document
  std::string diagnostics;  // human-readable, for stderr
};

inline constexpr double kScanBuresEps = 1e-3;

struct ScanConfig {
  std::string model;
  Grid grid;
  ModelContext context;
  Format format = Format::csv;
};
// Columns: theta, qfi, bures_metric, four_g_minus_qfi.
CommandResult cmd_qfi_scan(const ScanConfig& config);

CommandResult cmd_discontinuity(std::string_view model, double theta_bar,
                                const ModelContext& context, Format format = Format::json);

// Columns: N, t, qfi_continuous, qfi_discontinuous, qfi_continuous_per_t,
// qfi_discontinuous_per_t. The per-t columns are 0 at t = 0.
CommandResult cmd_ghz_scan(const std::vector<int>& qubits, double kappa, const Grid& times,
                           Format format = Format::csv);

struct McConfig {
  std::string model;
  double theta = 0.0;
  ModelContext context;
  std::uint64_t samples = 100;
  std::uint64_t replicates = 1000;
  std::uint64_t seed = 0;
  Format format = Format::json;
  std::optional<bool> expect_violation;
};
CommandResult cmd_mc(const McConfig& config);

// CSV cell: 17 significant digits; "inf", "-inf", "nan" spelled out.
std::string format_number(double x);

}  // namespace vrqfi::cli
