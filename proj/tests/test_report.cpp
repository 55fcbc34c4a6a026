// Copyright 2026 The qamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "json.hpp"
#include "qamp/errors.hpp"
#include "qamp/report.hpp"

using namespace qamp;

namespace {

ReportRow sample_row(int i) {
  ReportRow row;
  row.device = (i % 2) ? "npa" : "apa";
  row.alpha = 0.5;
  row.noise = 1.0 + 0.05 * i;
  row.subtractions = i % 5;
  row.amplitude_gain = 1.0 + std::sqrt(2.0) * i / 7.0;
  row.nominal_amplitude = row.amplitude_gain * row.alpha;
  row.fidelity = 1.0 / (1.0 + i);
  row.phase_variance = 3.289868133696 / (1 + 0.1 * i);
  row.success_weight = std::exp(-0.3 * i);
  row.dim = 64;
  row.tail_mass = 1e-17 * (i + 1);
  return row;
}

}  // namespace

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.0, 1.0, 0.05, 2.7310476331434, 1e-17, 3.289868133696453, -0.125,
                   std::numeric_limits<double>::min()}) {
    const std::string text = format_double(v);
    double parsed = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), parsed);
    CHECK(parsed == v);
  }
  CHECK(format_double(0.05) == "0.05");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("csv round-trip preserves every field") {
  std::vector<ReportRow> rows;
  for (int i = 0; i < 12; ++i) rows.push_back(sample_row(i));
  const std::string text = to_csv(rows);
  const auto parsed = parse_csv(text);
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].device == rows[i].device);
    CHECK(parsed[i].alpha == rows[i].alpha);
    CHECK(parsed[i].noise == rows[i].noise);
    CHECK(parsed[i].subtractions == rows[i].subtractions);
    CHECK(parsed[i].amplitude_gain == rows[i].amplitude_gain);
    CHECK(parsed[i].nominal_amplitude == rows[i].nominal_amplitude);
    CHECK(parsed[i].fidelity == rows[i].fidelity);
    CHECK(parsed[i].phase_variance == rows[i].phase_variance);
    CHECK(parsed[i].success_weight == rows[i].success_weight);
    CHECK(parsed[i].dim == rows[i].dim);
    CHECK(parsed[i].tail_mass == rows[i].tail_mass);
  }
}

TEST_CASE("csv header is pinned") {
  const std::string text = to_csv({});
  CHECK(text == std::string(kCsvHeader) + "\n");
  CHECK_THROWS_AS(parse_csv("bogus,header\n1,2\n"), DomainError);
  CHECK_THROWS_AS(parse_csv(""), DomainError);
  CHECK_THROWS_AS(parse_csv(std::string(kCsvHeader) + "\napa,1,2\n"), DomainError);
}

TEST_CASE("csv serialization is byte-stable") {
  std::vector<ReportRow> rows;
  for (int i = 0; i < 7; ++i) rows.push_back(sample_row(i));
  CHECK(to_csv(rows) == to_csv(rows));
}

TEST_CASE("nan fields survive a round trip") {
  ReportRow row = sample_row(0);
  row.amplitude_gain = std::numeric_limits<double>::quiet_NaN();
  const auto parsed = parse_csv(to_csv({&row, 1}));
  REQUIRE(parsed.size() == 1);
  CHECK(std::isnan(parsed[0].amplitude_gain));
  CHECK(parsed[0].fidelity == row.fidelity);
}

TEST_CASE("json mirrors the csv schema") {
  std::vector<ReportRow> rows{sample_row(0), sample_row(1)};
  const auto parsed = nlohmann::json::parse(to_json(rows));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  const auto& obj = parsed[0];
  for (const char* key : {"device", "alpha", "noise", "M", "g", "nominal_amplitude", "fidelity",
                          "phase_variance", "success_weight", "dim", "tail_mass"})
    CHECK(obj.contains(key));
  CHECK(obj["device"] == "apa");
  CHECK(obj["g"].get<double>() == rows[0].amplitude_gain);
  CHECK(obj["M"].get<int>() == rows[0].subtractions);
}
