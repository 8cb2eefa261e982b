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

// vrqfi: QFI sweeps, discontinuity reports, GHZ scans and Monte Carlo runs.
// Environment variables are never consulted.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace {

using namespace vrqfi::cli;

int emit(const CommandResult& r, const std::string& output_path) {
  if (!r.diagnostics.empty()) std::cerr << r.diagnostics;
  if (output_path.empty() || output_path == "-") {
    std::cout << r.output;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << output_path << "\n";
      return kUsage;
    }
    out << r.output;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Fisher information for variable-rank models"};
  app.require_subcommand(1);

  std::string model = "trig", grid_spec = "0:1:11", format, output;
  double kappa = 1.0, time = 1.0, theta_bar = 0.0;
  int qubits = 1;
  std::vector<int> qubit_list{1};
  std::uint64_t samples = 100, replicates = 1000, seed = 0;
  std::optional<bool> expect_violation;

  auto add_context = [&](CLI::App* sub) {
    sub->add_option("--kappa", kappa, "decay rate")->capture_default_str();
    sub->add_option("--time", time, "evolution time")->capture_default_str();
  };
  // Tables default to csv, reports to json.
  auto add_io = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--format", format, "csv or json (default " + default_format + ")")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "output file (default stdout)");
  };

  auto* scan = app.add_subcommand("qfi-scan", "QFI and Bures metric over a parameter grid");
  scan->add_option("--model", model, "model name")->required();
  scan->add_option("--grid", grid_spec, "start:stop:points[:log]")->required();
  scan->add_option("--qubits", qubits, "qubits for the ghz model")->capture_default_str();
  add_context(scan);
  add_io(scan, "csv");

  auto* disc = app.add_subcommand("discontinuity", "classify a rank-change point");
  disc->add_option("--model", model, "model name")->required();
  disc->add_option("--theta-bar", theta_bar, "rank-change point")->required();
  disc->add_option("--qubits", qubits, "qubits for the ghz model")->capture_default_str();
  add_context(disc);
  add_io(disc, "json");

  auto* ghz = app.add_subcommand("ghz-scan", "GHZ QFI closed forms over a time grid");
  ghz->add_option("--qubits", qubit_list, "qubit counts")->required()->expected(1, -1);
  ghz->add_option("--grid", grid_spec, "time grid start:stop:points[:log]")->required();
  ghz->add_option("--kappa", kappa, "decay rate")->capture_default_str();
  add_io(ghz, "csv");

  auto* mc = app.add_subcommand("mc", "Monte Carlo Cramer-Rao experiment");
  mc->add_option("--model", model, "model name")->required();
  mc->add_option("--theta,--theta-bar", theta_bar, "true parameter")->required();
  mc->add_option("--samples", samples, "samples per replicate (M)")->capture_default_str();
  mc->add_option("--replicates", replicates, "replicates (R)")->capture_default_str();
  mc->add_option("--seed", seed, "generator seed")->capture_default_str();
  mc->add_option("--expect-violation", expect_violation,
                 "exit 4 unless the violated flag equals this value");
  add_context(mc);
  add_io(mc, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (format.empty()) format = (*scan || *ghz) ? "csv" : "json";
    const Format fmt = parse_format(format);
    const vrqfi::ModelContext ctx{kappa, time, qubits};
    if (*scan) {
      return emit(cmd_qfi_scan({model, parse_grid(grid_spec), ctx, fmt}), output);
    }
    if (*disc) return emit(cmd_discontinuity(model, theta_bar, ctx, fmt), output);
    if (*ghz) return emit(cmd_ghz_scan(qubit_list, kappa, parse_grid(grid_spec), fmt), output);
    McConfig config;
    config.model = model;
    config.theta = theta_bar;
    config.context = ctx;
    config.samples = samples;
    config.replicates = replicates;
    config.seed = seed;
    config.format = fmt;
    config.expect_violation = expect_violation;
    return emit(cmd_mc(config), output);
  } catch (const vrqfi::Error& e) {
    std::cerr << "error (" << vrqfi::to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}
