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

#include "qamp/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qamp/oracle.hpp"
#include "qamp/pipeline.hpp"
#include "qamp/report.hpp"

namespace qamp {

namespace {

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct CommonArgs {
  std::string device = "apa";
  double alpha = 0.5;
  std::string subtractions = "1";
  std::string grid;  // empty -> device default
  int dim = 64;
  std::string out_path;
  std::string format = "csv";
  bool verify = false;
};

void add_common_options(CLI::App* cmd, CommonArgs& args, bool with_grid = true) {
  cmd->add_option("--device", args.device, "Device kind")
      ->check(CLI::IsMember({"apa", "npa"}))
      ->capture_default_str();
  cmd->add_option("--alpha", args.alpha, "Input coherent amplitude (> 0)")
      ->capture_default_str();
  cmd->add_option("--subtractions", args.subtractions,
                  "Subtracted photon count, single value or inclusive range a..b")
      ->capture_default_str();
  if (with_grid)
    cmd->add_option("--grid", args.grid,
                    "Noise grid start:stop:count (default 1:6:101 apa, 0:5:101 npa)");
  cmd->add_option("--dim", args.dim, "Fock basis cutoff")->envname("QAMP_DIM")->capture_default_str();
  cmd->add_option("--out", args.out_path, "Write output to this path instead of stdout");
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--verify", args.verify, "Cross-check results against the reference oracles");
}

DeviceKind parse_device(const std::string& name) {
  return name == "npa" ? DeviceKind::npa : DeviceKind::apa;
}

std::vector<int> parse_subtractions(const std::string& text) {
  const auto bad = [&] {
    return UsageError("bad --subtractions '" + text + "': expected n or a..b");
  };
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoi(text)};
    const int a = std::stoi(text.substr(0, dots));
    const int b = std::stoi(text.substr(dots + 2));
    if (b < a) throw bad();
    std::vector<int> values;
    for (int m = a; m <= b; ++m) values.push_back(m);
    return values;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

std::vector<double> parse_grid(const std::string& text, DeviceKind kind) {
  if (text.empty()) return default_noise_grid(kind);
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  try {
    if (parts.size() == 3) {
      const double start = std::stod(parts[0]);
      const double stop = std::stod(parts[1]);
      const int count = std::stoi(parts[2]);
      if (count == 1) return {start};
      if (count >= 2 && stop > start) return linspace(start, stop, count);
    }
  } catch (const std::exception&) {
  }
  throw UsageError("bad --grid '" + text + "': expected start:stop:count");
}

void emit(const std::vector<ReportRow>& rows, const CommonArgs& args, std::ostream& out,
          std::ostream& err) {
  const std::string text = args.format == "json" ? to_json(rows) : to_csv(rows);
  if (args.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(args.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output path '" + args.out_path + "'");
  file << text;
  if (!file.good()) throw DomainError("short write to '" + args.out_path + "'");
  err << "wrote " << rows.size() << " rows to " << args.out_path << "\n";
}

int verify_sweep_rows(const std::vector<ReportRow>& rows, const CommonArgs& args,
                      std::ostream& err) {
  // re-derive the gain of a few rows with the dense-scan oracle
  NumericsPolicy policy;
  policy.dim = args.dim;
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < rows.size(); i += std::max<std::size_t>(1, rows.size() / 2))
    if (!std::isnan(rows[i].amplitude_gain) && rows[i].amplitude_gain > 1.0) picks.push_back(i);
  int failures = 0;
  for (std::size_t i : picks) {
    const ReportRow& row = rows[i];
    const DeviceConfig cfg{parse_device(row.device), row.alpha, row.noise, row.subtractions,
                           policy};
    const DeviceOutcome outcome = run_device(cfg);
    const GainResult scan =
        oracle::brute_force_overlap_max(outcome.state, row.alpha, 8192, policy);
    const double diff = std::abs(scan.beta_star - outcome.gain.beta_star);
    const bool ok = diff <= 2.0 * policy.optimizer_tol && !scan.at_bracket_edge;
    err << "verify: " << row.device << " noise=" << format_double(row.noise)
        << " M=" << row.subtractions << " |beta_golden - beta_scan| = " << format_double(diff)
        << (ok ? " ok" : " MISMATCH") << "\n";
    if (!ok) ++failures;
  }
  return failures;
}

int run_sweep_command(const std::string& command, const CommonArgs& args, std::ostream& out,
                      std::ostream& err) {
  const DeviceKind kind = parse_device(args.device);
  NumericsPolicy policy;
  policy.dim = args.dim;

  std::vector<ReportRow> rows;
  for (int m : parse_subtractions(args.subtractions)) {
    SweepSpec spec;
    spec.base = DeviceConfig{kind, args.alpha, kind == DeviceKind::apa ? 1.0 : 0.0, m, policy};
    spec.grid = parse_grid(args.grid, kind);
    const auto swept = sweep(spec);

    for (const SweepRow& point : swept) {
      if (!point.error.empty())
        err << "point noise=" << format_double(point.noise) << " M=" << m
            << " failed: " << point.error << "\n";
      ReportRow row;
      row.device = device_name(kind);
      row.alpha = args.alpha;
      row.noise = point.noise;
      row.subtractions = m;
      row.amplitude_gain = point.amplitude_gain;
      row.nominal_amplitude = point.nominal_amplitude;
      row.fidelity = point.fidelity;
      row.phase_variance = point.phase_variance;
      row.success_weight = point.success_weight;
      row.dim = args.dim;
      row.tail_mass = point.tail_mass;
      rows.push_back(row);

      if (command == "phase-variance-sweep" && point.error.empty()) {
        // reference curves: the pure coherent state at the same nominal
        // amplitude, and the constant variance of the input state
        ReportRow ref = row;
        ref.device = "coherent";
        const FockDensityMatrix nominal = coherent_state(point.nominal_amplitude, policy);
        ref.fidelity = 1.0;
        ref.phase_variance = phase_variance(nominal, policy);
        ref.success_weight = 1.0;
        ref.tail_mass = nominal.tail_mass();
        rows.push_back(ref);

        ReportRow initial = ref;
        initial.device = "initial";
        const FockDensityMatrix input = coherent_state(args.alpha, policy);
        initial.phase_variance = phase_variance(input, policy);
        initial.tail_mass = input.tail_mass();
        rows.push_back(initial);
      }
    }
  }

  emit(rows, args, out, err);
  if (args.verify && verify_sweep_rows(rows, args, err) > 0) return 1;
  return 0;
}

int run_discriminate(const CommonArgs& args, std::ostream& out, std::ostream& err) {
  const DeviceKind kind = parse_device(args.device);
  NumericsPolicy policy;
  policy.dim = args.dim;
  const std::vector<double> grid =
      args.grid.empty() ? std::vector<double>{} : parse_grid(args.grid, kind);

  std::string csv = "device,alpha,M,noise_star,fidelity_star,dim\n";
  nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
  int failures = 0;
  for (int m : parse_subtractions(args.subtractions)) {
    const MinimizeResult result = minimize_discrimination(kind, args.alpha, m, policy, grid);
    csv += std::string(device_name(kind)) + "," + format_double(args.alpha) + "," +
           std::to_string(m) + "," + format_double(result.noise_star) + "," +
           format_double(result.objective_star) + "," + std::to_string(args.dim) + "\n";
    nlohmann::ordered_json obj;
    obj["device"] = device_name(kind);
    obj["alpha"] = args.alpha;
    obj["M"] = m;
    obj["noise_star"] = result.noise_star;
    obj["fidelity_star"] = result.objective_star;
    obj["dim"] = args.dim;
    json_rows.push_back(std::move(obj));

    if (args.verify) {
      // parity shortcut against an explicit -alpha pipeline run
      const DeviceConfig cfg{kind, args.alpha, result.noise_star, m, policy};
      FockDensityMatrix front(policy.dim);
      if (kind == DeviceKind::apa)
        front = amplify(coherent_state(-args.alpha, policy), {result.noise_star}, policy);
      else
        front = npa_front_end(-args.alpha, result.noise_star, policy);
      const FockDensityMatrix minus = subtract_photons(front, {m}).state;
      const DeviceOutcome plus = run_device(cfg);
      const double diff = max_elementwise_diff(parity_flip(plus.state), minus);
      const bool ok = diff <= 1e-9;
      err << "verify: parity transform vs explicit -alpha run, M=" << m
          << ": max diff = " << format_double(diff) << (ok ? " ok" : " MISMATCH") << "\n";
      if (!ok) ++failures;
    }
  }

  const std::string text = args.format == "json" ? json_rows.dump(2) + "\n" : csv;
  if (args.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(args.out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output path '" + args.out_path + "'");
    file << text;
  }
  return failures > 0 ? 1 : 0;
}

struct ReportLine {
  std::string claim;
  double reference;
  double computed;
  double tolerance;
};

int run_reproduce(const CommonArgs& args, std::ostream& out, std::ostream& err) {
  NumericsPolicy policy;
  policy.dim = args.dim;

  // identify the subtraction count that reproduces both quoted gains
  int m_star = 0;
  std::map<int, std::pair<double, double>> gains;
  for (int m = 1; m <= 4; ++m) {
    const double g_apa = run_device({DeviceKind::apa, 0.5, 2.0, m, policy}).gain.amplitude_gain;
    const double g_npa = run_device({DeviceKind::npa, 0.5, 1.0, m, policy}).gain.amplitude_gain;
    gains[m] = {g_apa, g_npa};
    if (std::abs(g_apa - 2.73) <= 0.02 && std::abs(g_npa - 2.39) <= 0.02) m_star = m;
  }
  if (m_star == 0) {
    err << "note: no single M in 1..4 reproduces both quoted gains; reporting M=1\n";
    m_star = 1;
  } else {
    out << "quoted gains reproduced with M = " << m_star << " subtracted photon(s)\n";
  }

  const auto var_apa_1 = minimize_phase_variance(DeviceKind::apa, 0.5, 1, policy);
  const auto var_npa_1 = minimize_phase_variance(DeviceKind::npa, 0.5, 1, policy);
  const auto var_apa_2 = minimize_phase_variance(DeviceKind::apa, 0.5, 2, policy);
  const auto var_npa_2 = minimize_phase_variance(DeviceKind::npa, 0.5, 2, policy);
  const auto npa_locus = minimize_phase_variance(DeviceKind::npa, 0.48, 1, policy);
  const auto disc_1 = minimize_discrimination(DeviceKind::apa, 0.5, 1, policy);
  const auto disc_2 = minimize_discrimination(DeviceKind::apa, 0.5, 2, policy);
  const double baseline = discrimination_fidelity({DeviceKind::apa, 0.5, 1.0, 0, policy});

  const ReportLine lines[] = {
      {"apa amplitude gain g (alpha=0.5, G=2, M=" + std::to_string(m_star) + ")", 2.73,
       gains[m_star].first, 0.02},
      {"npa amplitude gain g (alpha=0.5, nbar=1, M=" + std::to_string(m_star) + ")", 2.39,
       gains[m_star].second, 0.02},
      {"min phase-variance ratio apa/npa, M=1", 0.75,
       var_apa_1.objective_star / var_npa_1.objective_star, 0.03},
      {"min phase-variance ratio apa/npa, M=2", 0.70,
       var_apa_2.objective_star / var_npa_2.objective_star, 0.03},
      {"npa variance minimizer nbar* (alpha=0.48, M=1)", 0.25, npa_locus.noise_star, 0.10},
      {"apa min discrimination fidelity, M=1", 0.178, disc_1.objective_star, 0.005},
      {"apa min discrimination fidelity, M=2", 0.075, disc_2.objective_star, 0.005},
      {"discrimination baseline (M=0, G=1)", 0.368, baseline, 0.001},
  };

  char buf[160];
  std::snprintf(buf, sizeof buf, "%-52s %10s %12s %10s  %s", "claim", "reference", "computed",
                "|delta|", "verdict");
  out << buf << "\n";
  int failures = 0;
  for (const ReportLine& line : lines) {
    const double delta = std::abs(line.computed - line.reference);
    const bool pass = delta <= line.tolerance;
    if (!pass) ++failures;
    std::snprintf(buf, sizeof buf, "%-52s %10.3f %12.6f %10.6f  %s", line.claim.c_str(),
                  line.reference, line.computed, delta, pass ? "pass" : "FAIL");
    out << buf << "\n";
  }
  out << (failures == 0 ? "all claims reproduced\n"
                        : std::to_string(failures) + " claim(s) outside tolerance\n");

  if (args.verify) {
    struct OracleLine {
      std::string name;
      double diff;
      double tol;
    };
    std::vector<OracleLine> checks;
    {
      const auto fast = displaced_thermal(0.5, 1.0, policy);
      const auto slow = oracle::displacement_exponential_state(0.5, 1.0, policy);
      checks.push_back({"displaced_thermal vs exponentiated displacement",
                        max_elementwise_diff(fast, slow), 1e-7});
      const auto amp = amplify(coherent_state(0.5, policy), {2.0}, policy);
      const auto dt = displaced_thermal(0.5 * std::sqrt(2.0), 1.0, policy);
      checks.push_back({"amplifier map vs displaced thermal", max_elementwise_diff(amp, dt), 1e-7});
      const auto sub = subtract_photons(amp, {2});
      const auto sand = oracle::lowering_sandwich(amp, 2);
      checks.push_back(
          {"subtraction vs lowering sandwich", max_elementwise_diff(sub.state, sand.state), 1e-12});
      const auto gain = device_gain(sub.state, 0.5, policy);
      const auto scan = oracle::brute_force_overlap_max(sub.state, 0.5, 8192, policy);
      checks.push_back({"golden-section gain vs dense scan",
                        std::abs(gain.beta_star - scan.beta_star), 2.0 * policy.optimizer_tol});
      const auto npa = npa_front_end(0.5, 1.0, policy);
      const auto scaled = amplify(coherent_state(0.5 / std::sqrt(2.0), policy), {2.0}, policy);
      checks.push_back(
          {"npa front end vs amplifier on scaled input", max_elementwise_diff(npa, scaled), 1e-7});
    }
    for (const auto& check : checks) {
      const bool ok = check.diff <= check.tol;
      if (!ok) ++failures;
      err << "verify: " << check.name << ": " << format_double(check.diff)
          << (ok ? " ok" : " MISMATCH") << "\n";
    }
  }

  if (!args.out_path.empty()) {
    std::ofstream file(args.out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output path '" + args.out_path + "'");
    // re-render for the file copy
    std::ostringstream copy;
    for (const ReportLine& line : lines) {
      const double delta = std::abs(line.computed - line.reference);
      copy << line.claim << "," << format_double(line.reference) << ","
           << format_double(line.computed) << "," << format_double(delta) << ","
           << (delta <= line.tolerance ? "pass" : "fail") << "\n";
    }
    file << copy.str();
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conditional quantum optical amplification in a truncated number basis"};
  app.require_subcommand(1);

  CommonArgs gain_args, fidelity_args, phase_args, disc_args, repro_args;
  CLI::App* cmd_gain = app.add_subcommand("gain-sweep", "Device amplitude gain over a noise grid");
  add_common_options(cmd_gain, gain_args);
  CLI::App* cmd_fidelity =
      app.add_subcommand("fidelity-sweep", "Fidelity against the nominal coherent state");
  add_common_options(cmd_fidelity, fidelity_args);
  CLI::App* cmd_phase = app.add_subcommand(
      "phase-variance-sweep", "Phase variance over a noise grid, with reference curves");
  add_common_options(cmd_phase, phase_args);
  CLI::App* cmd_disc = app.add_subcommand(
      "discriminate", "Minimum +/-alpha discrimination fidelity per subtraction count");
  add_common_options(cmd_disc, disc_args);
  CLI::App* cmd_repro =
      app.add_subcommand("reproduce-paper", "Recompute the published reference values");
  cmd_repro->add_option("--dim", repro_args.dim, "Fock basis cutoff")
      ->envname("QAMP_DIM")
      ->capture_default_str();
  cmd_repro->add_option("--out", repro_args.out_path, "Also write the table as CSV to this path");
  cmd_repro->add_flag("--verify", repro_args.verify,
                      "Also run the oracle cross-checks on the fast paths");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "qamp: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_gain->parsed()) return run_sweep_command("gain-sweep", gain_args, out, err);
    if (cmd_fidelity->parsed()) return run_sweep_command("fidelity-sweep", fidelity_args, out, err);
    if (cmd_phase->parsed()) return run_sweep_command("phase-variance-sweep", phase_args, out, err);
    if (cmd_disc->parsed()) return run_discriminate(disc_args, out, err);
    if (cmd_repro->parsed()) return run_reproduce(repro_args, out, err);
  } catch (const UsageError& e) {
    err << "qamp: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "qamp: error: " << e.what() << "\n";
    return 1;
  }
  err << "qamp: no command\n";
  return 2;
}

}  // namespace qamp
