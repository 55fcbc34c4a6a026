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

// Row records written by the CLI. One CSV schema serves every sweep; JSON
// output is an array of objects with the same field names.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qamp {

inline constexpr std::string_view kCsvHeader =
    "device,alpha,noise,M,g,nominal_amplitude,fidelity,phase_variance,"
    "success_weight,dim,tail_mass";

struct ReportRow {
  std::string device;  // "apa", "npa", or a reference curve name
  double alpha = 0.0;
  double noise = 0.0;
  int subtractions = 0;
  double amplitude_gain = 0.0;
  double nominal_amplitude = 0.0;
  double fidelity = 0.0;
  double phase_variance = 0.0;
  double success_weight = 0.0;
  int dim = 0;
  double tail_mass = 0.0;
};

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

std::string to_csv(std::span<const ReportRow> rows);
std::string to_json(std::span<const ReportRow> rows);

/// Inverse of to_csv; throws DomainError on a malformed header or row.
std::vector<ReportRow> parse_csv(std::string_view text);

}  // namespace qamp
