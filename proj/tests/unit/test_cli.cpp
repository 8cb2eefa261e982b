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

#include <charconv>
#include <json.hpp>
#include <map>
#include <numbers>
#include <sstream>

#include "commands.hpp"
#include "helpers.hpp"

using namespace vrqfi;
using namespace vrqfi::cli;

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  double num(std::size_t row, const std::string& col) const {
    const auto it = std::find(header.begin(), header.end(), col);
    REQUIRE(it != header.end());
    const std::string& cell = rows.at(row).at(std::size_t(it - header.begin()));
    if (cell == "inf") return std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    REQUIRE(ec == std::errc{});
    REQUIRE(ptr == cell.data() + cell.size());
    return v;
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

/// Schema check: LF endings, exact header, rectangular body, numeric cells
/// parse (or are an error marker).
Table parse_csv(const std::string& text, const std::vector<std::string>& header) {
  CHECK(text.find('\r') == std::string::npos);
  REQUIRE(!text.empty());
  CHECK(text.back() == '\n');
  Table t;
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);
  t.header = split(line);
  CHECK(t.header == header);
  while (std::getline(ss, line)) {
    t.rows.push_back(split(line));
    CHECK(t.rows.back().size() == header.size());
  }
  return t;
}

const std::vector<std::string> kScanHeader{"theta", "qfi", "bures_metric", "four_g_minus_qfi"};
const std::vector<std::string> kGhzHeader{"N", "t", "qfi_continuous", "qfi_discontinuous",
                                          "qfi_continuous_per_t", "qfi_discontinuous_per_t"};

}  // namespace

TEST_CASE("grid parsing") {
  const Grid g = parse_grid("0.1:1.4:14");
  CHECK(g.points == 14);
  const auto v = g.values();
  CHECK(v.front() == 0.1);
  CHECK(v.back() == 1.4);
  const auto lg = parse_grid("1e-2:1:3:log").values();
  CHECK(lg[1] == doctest::Approx(0.1));
  for (const char* bad : {"1:2", "1:2:1", "a:2:3", "1:2:3:lin", "0:1:3:log", "1:2:2.5"}) {
    CHECK(testing::thrown_kind([&] { parse_grid(bad); }) == ErrorKind::invalid_input);
  }
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("qfi-scan tables") {
  const CommandResult trig = cmd_qfi_scan({"trig", parse_grid("0.1:1.4:14"), {}, Format::csv});
  CHECK(trig.exit_code == kOk);
  const Table t = parse_csv(trig.output, kScanHeader);
  REQUIRE(t.rows.size() == 14);
  for (std::size_t r = 0; r < 14; ++r) CHECK(std::abs(t.num(r, "qfi") - 4.0) < 1e-9);

  const CommandResult bit = cmd_qfi_scan({"classical-bit", parse_grid("0.1:0.9:5"), {}, Format::csv});
  const Table b = parse_csv(bit.output, kScanHeader);
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    const double p = b.num(r, "theta");
    CHECK(testing::rel_err(b.num(r, "qfi"), 1.0 / (p * (1 - p))) < 1e-12);
  }
  CHECK(std::abs(b.num(2, "four_g_minus_qfi")) < 1e-3);

  // Determinism: byte-identical reruns.
  CHECK(cmd_qfi_scan({"trig", parse_grid("0.1:1.4:14"), {}, Format::csv}).output == trig.output);
}

TEST_CASE("qfi-scan marks out-of-domain rows") {
  const CommandResult r = cmd_qfi_scan({"classical-bit", parse_grid("0.5:1.5:3"), {}, Format::csv});
  CHECK(r.exit_code == kDomain);
  const Table t = parse_csv(r.output, kScanHeader);
  CHECK(t.rows[0][1] != "error");
  CHECK(t.rows[2][1] == "error");
  CHECK(r.diagnostics.find("domain") != std::string::npos);

  CHECK(cmd_qfi_scan({"nope", parse_grid("0:1:2"), {}, Format::csv}).exit_code == kUsage);

  const auto json = nlohmann::json::parse(
      cmd_qfi_scan({"trig", parse_grid("0:1.5707963267948966:3"), {}, Format::json}).output);
  CHECK(json["rows"].size() == 3);
  CHECK(json["rows"][1]["qfi"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("discontinuity reports") {
  auto report = [](const char* model, double theta_bar, ModelContext ctx = {}) {
    const CommandResult r = cmd_discontinuity(model, theta_bar, ctx);
    REQUIRE(r.exit_code == kOk);
    return nlohmann::json::parse(r.output);
  };
  const auto bit = report("classical-bit", 0.0);
  CHECK(bit["kind"] == "second-kind");
  CHECK(bit["qfi_limit"] == "inf");
  CHECK(!bit["evidence"].empty());

  const auto trig = report("trig", std::numbers::pi / 2);
  CHECK(trig["kind"] == "jump");
  CHECK(trig["delta_Q_measured"].get<double>() == doctest::Approx(4.0).epsilon(1e-6));

  const auto tq = report("transverse-qubit", 0.0, ModelContext{1.0, 1.0, 1});
  CHECK(tq["kind"] == "jump");
  CHECK(tq["qfi_at_bar"].get<double>() == doctest::Approx(0.399576).epsilon(1e-6));
  for (const char* key : {"theta_bar", "v", "a", "kind", "delta_Q_predicted", "delta_Q_measured",
                          "qfi_at_bar", "qfi_limit"}) {
    CHECK(tq.contains(key));
  }

  const CommandResult none = cmd_discontinuity("trig", 0.7, {});
  CHECK(none.exit_code == kNotADiscontinuity);
  CHECK(none.diagnostics.find("not-a-discontinuity") != std::string::npos);
  CHECK(cmd_discontinuity("trig", 3.0, {}).exit_code == kDomain);
  CHECK(cmd_discontinuity("ghz", 0.0, ModelContext{1.0, 1.0, 2}).exit_code == kNumerical);

  const CommandResult csv = cmd_discontinuity("trig", 0.0, {}, Format::csv);
  parse_csv(csv.output, {"model", "theta_bar", "v", "a", "kind", "delta_Q_predicted",
                         "delta_Q_measured", "qfi_at_bar", "qfi_limit"});
}

TEST_CASE("ghz-scan tables") {
  const CommandResult r = cmd_ghz_scan({1, 3}, 1.0, parse_grid("0:2:3"));
  CHECK(r.exit_code == kOk);
  const Table t = parse_csv(r.output, kGhzHeader);
  REQUIRE(t.rows.size() == 6);
  CHECK(t.rows[0][0] == "1");
  for (const char* col : {"qfi_continuous", "qfi_discontinuous", "qfi_continuous_per_t",
                          "qfi_discontinuous_per_t"}) {
    CHECK(t.num(0, col) == 0.0);
    CHECK(t.num(3, col) == 0.0);
  }
  CHECK(t.num(1, "qfi_discontinuous") == doctest::Approx(0.399576).epsilon(1e-6));
  CHECK(t.num(1, "qfi_continuous") == doctest::Approx(0.735759).epsilon(1e-6));

  const CommandResult bad = cmd_ghz_scan({25}, 1.0, parse_grid("0:1:2"));
  CHECK(bad.exit_code == kDomain);
  CHECK(cmd_ghz_scan({}, 1.0, parse_grid("0:1:2")).exit_code == kUsage);
}

TEST_CASE("mc reports") {
  McConfig c;
  c.model = "classical-bit";
  c.theta = 0.0;
  c.samples = 100;
  c.replicates = 100;
  c.seed = 7;
  const CommandResult r = cmd_mc(c);
  REQUIRE(r.exit_code == kOk);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["sample_variance"].get<double>() == 0.0);
  CHECK(j["violated"] == true);
  CHECK(j["estimates"].size() == 100);
  CHECK(cmd_mc(c).output == r.output);

  c.expect_violation = false;
  CHECK(cmd_mc(c).exit_code == kExpectationMismatch);
  c.expect_violation = true;
  CHECK(cmd_mc(c).exit_code == kOk);

  c.model = "trig";
  c.theta = std::numbers::pi / 2;
  const auto trig = nlohmann::json::parse(cmd_mc(c).output);
  CHECK(trig["cr_bound"] == "not-applicable");
  CHECK(trig["violated"] == true);

  c.format = Format::csv;
  parse_csv(cmd_mc(c).output,
            {"model", "theta_true", "samples", "replicates", "seed", "mean", "sample_variance", "qfi",
             "qfi_limit", "cr_bound", "variance_threshold", "violated", "boundary_solutions"});

  c.replicates = 1;
  CHECK(cmd_mc(c).exit_code == kUsage);
}
