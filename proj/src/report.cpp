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

#include "qamp/report.hpp"

#include <charconv>
#include <cstdlib>
#include <system_error>

#include "json.hpp"
#include "qamp/errors.hpp"

namespace qamp {

namespace {

double parse_double_field(std::string_view field) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw DomainError("parse_csv: bad numeric field '" + std::string(field) + "'");
  return value;
}

int parse_int_field(std::string_view field) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw DomainError("parse_csv: bad integer field '" + std::string(field) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

std::string to_csv(std::span<const ReportRow> rows) {
  std::string out{kCsvHeader};
  out.push_back('\n');
  for (const ReportRow& row : rows) {
    out += row.device;
    out.push_back(',');
    out += format_double(row.alpha);
    out.push_back(',');
    out += format_double(row.noise);
    out.push_back(',');
    out += std::to_string(row.subtractions);
    out.push_back(',');
    out += format_double(row.amplitude_gain);
    out.push_back(',');
    out += format_double(row.nominal_amplitude);
    out.push_back(',');
    out += format_double(row.fidelity);
    out.push_back(',');
    out += format_double(row.phase_variance);
    out.push_back(',');
    out += format_double(row.success_weight);
    out.push_back(',');
    out += std::to_string(row.dim);
    out.push_back(',');
    out += format_double(row.tail_mass);
    out.push_back('\n');
  }
  return out;
}

std::string to_json(std::span<const ReportRow> rows) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const ReportRow& row : rows) {
    nlohmann::ordered_json obj;
    obj["device"] = row.device;
    obj["alpha"] = row.alpha;
    obj["noise"] = row.noise;
    obj["M"] = row.subtractions;
    obj["g"] = row.amplitude_gain;
    obj["nominal_amplitude"] = row.nominal_amplitude;
    obj["fidelity"] = row.fidelity;
    obj["phase_variance"] = row.phase_variance;
    obj["success_weight"] = row.success_weight;
    obj["dim"] = row.dim;
    obj["tail_mass"] = row.tail_mass;
    array.push_back(std::move(obj));
  }
  return array.dump(2) + "\n";
}

std::vector<ReportRow> parse_csv(std::string_view text) {
  std::vector<ReportRow> rows;
  std::size_t line_start = 0;
  bool saw_header = false;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    line_start = line_end + 1;
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != kCsvHeader) throw DomainError("parse_csv: unexpected header");
      saw_header = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 11) throw DomainError("parse_csv: expected 11 fields");
    ReportRow row;
    row.device = std::string(fields[0]);
    row.alpha = parse_double_field(fields[1]);
    row.noise = parse_double_field(fields[2]);
    row.subtractions = parse_int_field(fields[3]);
    row.amplitude_gain = parse_double_field(fields[4]);
    row.nominal_amplitude = parse_double_field(fields[5]);
    row.fidelity = parse_double_field(fields[6]);
    row.phase_variance = parse_double_field(fields[7]);
    row.success_weight = parse_double_field(fields[8]);
    row.dim = parse_int_field(fields[9]);
    row.tail_mass = parse_double_field(fields[10]);
    rows.push_back(std::move(row));
  }
  if (!saw_header) throw DomainError("parse_csv: empty input");
  return rows;
}

}  // namespace qamp
