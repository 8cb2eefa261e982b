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

#include "commands.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>

#include "vrqfi/discontinuity.hpp"
#include "vrqfi/estimation.hpp"
#include "vrqfi/models.hpp"
#include "vrqfi/quantum.hpp"

namespace vrqfi::cli {
namespace {

using nlohmann::ordered_json;

ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

double parse_double(std::string_view s, std::string_view what) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::invalid_input, fmt::format("bad {} '{}'", what, s));
  }
  return out;
}

std::string join_csv(const std::vector<std::string>& cells) {
  return fmt::format("{}\n", fmt::join(cells, ","));
}

// Row-level failures keep the worst exit code seen.
struct RowErrors {
  int code = kOk;
  std::string log;

  void add(double at, const Error& e) {
    code = std::max(code, exit_code_for(e.kind()));
    log += fmt::format("at {}: {} ({})\n", format_number(at), e.what(), to_string(e.kind()));
  }
};

CommandResult failure(const Error& e) {
  return {exit_code_for(e.kind()), "", fmt::format("error ({}): {}\n", to_string(e.kind()), e.what())};
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input:
    case ErrorKind::unsupported:
    case ErrorKind::insufficient_replicates: return kUsage;
    case ErrorKind::domain: return kDomain;
    case ErrorKind::not_a_discontinuity: return kNotADiscontinuity;
    case ErrorKind::numerical:
    case ErrorKind::degenerate_model:
    case ErrorKind::step_size:
    case ErrorKind::divergence:
    case ErrorKind::multi_branch:
    case ErrorKind::misidentified_outcome: return kNumerical;
  }
  return kNumerical;
}

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw Error(ErrorKind::invalid_input, fmt::format("unknown format '{}'", s));
}

std::vector<double> Grid::values() const {
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double u = double(i) / double(points - 1);
    out[i] = log ? start * std::pow(stop / start, u) : start + (stop - start) * u;
  }
  // Hit the end point exactly.
  out.back() = stop;
  return out;
}

Grid parse_grid(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = spec.find(':', pos);
    parts.push_back(spec.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (parts.size() < 3 || parts.size() > 4 || (parts.size() == 4 && parts[3] != "log")) {
    throw Error(ErrorKind::invalid_input,
                fmt::format("grid '{}' is not start:stop:points[:log]", spec));
  }
  Grid g;
  g.start = parse_double(parts[0], "grid start");
  g.stop = parse_double(parts[1], "grid stop");
  const double points = parse_double(parts[2], "grid points");
  if (points < 2 || points != std::floor(points) || points > 1e7) {
    throw Error(ErrorKind::invalid_input, "grid needs an integer number of points >= 2");
  }
  g.points = static_cast<int>(points);
  g.log = parts.size() == 4;
  if (!std::isfinite(g.start) || !std::isfinite(g.stop)) {
    throw Error(ErrorKind::invalid_input, "grid bounds must be finite");
  }
  if (g.log && !(g.start > 0.0 && g.stop > 0.0)) {
    throw Error(ErrorKind::invalid_input, "log grid needs positive bounds");
  }
  return g;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

CommandResult cmd_qfi_scan(const ScanConfig& config) {
  try {
    const ParametricModel model = make_model(config.model, config.context);
    RowErrors errors;
    std::string csv = join_csv({"theta", "qfi", "bures_metric", "four_g_minus_qfi"});
    ordered_json rows = ordered_json::array();
    for (double theta : config.grid.values()) {
      try {
        const double q = qfi(model, theta);
        const double g = bures_metric_fd(model, theta, kScanBuresEps);
        csv += join_csv({format_number(theta), format_number(q), format_number(g),
                         format_number(4.0 * g - q)});
        rows.push_back({{"theta", json_number(theta)},
                        {"qfi", json_number(q)},
                        {"bures_metric", json_number(g)},
                        {"four_g_minus_qfi", json_number(4.0 * g - q)}});
      } catch (const Error& e) {
        errors.add(theta, e);
        csv += join_csv({format_number(theta), "error", "error", "error"});
        rows.push_back({{"theta", json_number(theta)}, {"error", std::string(to_string(e.kind()))}});
      }
    }
    if (config.format == Format::csv) return {errors.code, csv, errors.log};
    ordered_json doc = {{"command", "qfi-scan"}, {"model", model.name()}, {"rows", rows}};
    return {errors.code, doc.dump(2) + "\n", errors.log};
  } catch (const Error& e) {
    return failure(e);
  }
}

CommandResult cmd_discontinuity(std::string_view model_name, double theta_bar,
                                const ModelContext& context, Format format) {
  try {
    const ParametricModel model = make_model(model_name, context);
    const DiscontinuityReport r = classify(model, theta_bar);
    if (format == Format::csv) {
      std::string out = join_csv({"model", "theta_bar", "v", "a", "kind", "delta_Q_predicted",
                                  "delta_Q_measured", "qfi_at_bar", "qfi_limit"});
      out += join_csv({model.name(), format_number(r.theta_bar), format_number(r.v),
                       format_number(r.a), std::string(to_string(r.kind)),
                       format_number(r.delta_Q_predicted), format_number(r.delta_Q_measured),
                       format_number(r.qfi_at_bar), format_number(r.qfi_limit)});
      return {kOk, out, r.note.empty() ? "" : r.note + "\n"};
    }
    ordered_json evidence = ordered_json::array();
    for (const auto& [theta, q] : r.evidence) evidence.push_back({json_number(theta), json_number(q)});
    ordered_json doc = {{"model", model.name()},
                        {"theta_bar", json_number(r.theta_bar)},
                        {"v", json_number(r.v)},
                        {"a", json_number(r.a)},
                        {"kind", std::string(to_string(r.kind))},
                        {"delta_Q_predicted", json_number(r.delta_Q_predicted)},
                        {"delta_Q_measured", json_number(r.delta_Q_measured)},
                        {"qfi_at_bar", json_number(r.qfi_at_bar)},
                        {"qfi_limit", json_number(r.qfi_limit)},
                        {"evidence", evidence},
                        {"note", r.note}};
    return {kOk, doc.dump(2) + "\n", ""};
  } catch (const Error& e) {
    return failure(e);
  }
}

CommandResult cmd_ghz_scan(const std::vector<int>& qubits, double kappa, const Grid& times,
                           Format format) {
  if (qubits.empty()) return {kUsage, "", "error: no qubit counts given\n"};
  RowErrors errors;
  std::string csv = join_csv({"N", "t", "qfi_continuous", "qfi_discontinuous",
                              "qfi_continuous_per_t", "qfi_discontinuous_per_t"});
  ordered_json rows = ordered_json::array();
  for (int n : qubits) {
    for (double t : times.values()) {
      try {
        const double qc = ghz_qfi_continuous(n, kappa, t);
        const double qd = ghz_qfi_discontinuous(n, kappa, t);
        const double qc_t = t > 0.0 ? qc / t : 0.0;
        const double qd_t = t > 0.0 ? qd / t : 0.0;
        csv += join_csv({std::to_string(n), format_number(t), format_number(qc),
                         format_number(qd), format_number(qc_t), format_number(qd_t)});
        rows.push_back({{"N", n},
                        {"t", json_number(t)},
                        {"qfi_continuous", json_number(qc)},
                        {"qfi_discontinuous", json_number(qd)},
                        {"qfi_continuous_per_t", json_number(qc_t)},
                        {"qfi_discontinuous_per_t", json_number(qd_t)}});
      } catch (const Error& e) {
        errors.add(t, e);
        csv += join_csv({std::to_string(n), format_number(t), "error", "error", "error", "error"});
        rows.push_back({{"N", n}, {"t", json_number(t)}, {"error", std::string(to_string(e.kind()))}});
      }
    }
  }
  if (format == Format::csv) return {errors.code, csv, errors.log};
  ordered_json doc = {{"command", "ghz-scan"}, {"kappa", json_number(kappa)}, {"rows", rows}};
  return {errors.code, doc.dump(2) + "\n", errors.log};
}

CommandResult cmd_mc(const McConfig& config) {
  try {
    const ParametricModel model = make_model(config.model, config.context);
    const EstimationReport r =
        run_cr_experiment(model, config.theta, canonical_measurement(model), config.samples,
                          config.replicates, config.seed);
    const std::string cr = r.cr_bound ? format_number(*r.cr_bound) : "not-applicable";
    const std::string limit = r.qfi_limit ? format_number(*r.qfi_limit) : "";

    CommandResult out;
    if (config.format == Format::csv) {
      out.output = join_csv({"model", "theta_true", "samples", "replicates", "seed", "mean",
                             "sample_variance", "qfi", "qfi_limit", "cr_bound",
                             "variance_threshold", "violated", "boundary_solutions"});
      out.output += join_csv({r.model, format_number(r.theta_true), std::to_string(r.samples),
                              std::to_string(r.replicates), std::to_string(r.seed),
                              format_number(r.mean), format_number(r.sample_variance),
                              format_number(r.qfi), limit, cr,
                              format_number(r.variance_threshold),
                              r.violated ? "true" : "false", std::to_string(r.boundary_solutions)});
      for (const std::string& note : r.notes) out.diagnostics += note + "\n";
    } else {
      ordered_json estimates = ordered_json::array();
      for (double e : r.estimates) estimates.push_back(json_number(e));
      ordered_json doc = {
          {"model", r.model},
          {"theta_true", json_number(r.theta_true)},
          {"samples", r.samples},
          {"replicates", r.replicates},
          {"seed", r.seed},
          {"mean", json_number(r.mean)},
          {"sample_variance", json_number(r.sample_variance)},
          {"qfi", json_number(r.qfi)},
          {"qfi_limit", r.qfi_limit ? json_number(*r.qfi_limit) : ordered_json(nullptr)},
          {"cr_bound", r.cr_bound ? json_number(*r.cr_bound) : ordered_json("not-applicable")},
          {"variance_threshold", json_number(r.variance_threshold)},
          {"violated", r.violated},
          {"boundary_solutions", r.boundary_solutions},
          {"notes", r.notes},
          {"estimates", estimates}};
      out.output = doc.dump(2) + "\n";
    }
    if (config.expect_violation && *config.expect_violation != r.violated) {
      out.exit_code = kExpectationMismatch;
      out.diagnostics += fmt::format("expected violated={}, got {}\n", *config.expect_violation,
                                     r.violated);
    }
    return out;
  } catch (const Error& e) {
    return failure(e);
  }
}

}  // namespace vrqfi::cli
