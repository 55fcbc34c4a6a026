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

#include "qamp/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "qamp/optimize.hpp"

namespace qamp {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct DeviceState {
  SubtractionResult subtracted;
  double front_end_tail = 0.0;
};

/// Front end plus M subtractions; the scalar metrics are left to callers so
/// the minimizers do not pay for gain searches they never read.
DeviceState device_output_state(const DeviceConfig& cfg) {
  validate_config(cfg);
  const FockDensityMatrix fed =
      cfg.kind == DeviceKind::apa
          ? amplify(coherent_state(cfg.alpha, cfg.policy), {cfg.noise}, cfg.policy)
          : npa_front_end(cfg.alpha, cfg.noise, cfg.policy);
  const double tail = fed.tail_mass();
  return {subtract_photons(fed, {cfg.subtractions}), tail};
}

using Objective = std::function<double(double)>;

MinimizeResult minimize_over_noise(DeviceKind kind, const Objective& objective,
                                   const NumericsPolicy& policy,
                                   const std::vector<double>& grid_in) {
  const std::vector<double> grid = grid_in.empty() ? default_noise_grid(kind) : grid_in;
  const int count = static_cast<int>(grid.size());
  if (count < 3) throw DomainError("minimize: grid needs at least 3 points");

  std::vector<double> values(count, kNan);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      values[i] = objective(grid[i]);
    } catch (const std::exception&) {
      // left NaN; skipped below
    }
  }

  int best = -1;
  for (int i = 0; i < count; ++i)
    if (!std::isnan(values[i]) && (best < 0 || values[i] < values[best])) best = i;
  if (best < 0) throw OptimizationError("minimize: every grid point failed");
  if (best == count - 1)
    throw OptimizationError("minimize: objective still decreasing at the upper grid edge");
  if (best == 0) return {grid[0], values[0]};  // minimum at the domain boundary
  if (std::isnan(values[best - 1]) || std::isnan(values[best + 1]))
    throw OptimizationError("minimize: grid minimum adjacent to a failed point");

  const double x_star =
      golden_section_min(objective, grid[best - 1], grid[best + 1], policy.optimizer_tol);
  return {x_star, objective(x_star)};
}

}  // namespace

const char* device_name(DeviceKind kind) { return kind == DeviceKind::apa ? "apa" : "npa"; }

void validate_config(const DeviceConfig& cfg) {
  if (!cfg.policy.valid())
    throw DomainError("DeviceConfig: tolerances must be positive, dim >= 8");
  if (!(cfg.alpha > 0.0)) throw DomainError("DeviceConfig: alpha must be > 0");
  if (cfg.subtractions < 0 || cfg.subtractions > 8)
    throw DomainError("DeviceConfig: subtractions must be in [0, 8]");
  if (cfg.kind == DeviceKind::apa && !(cfg.noise >= 1.0))
    throw DomainError("DeviceConfig: intensity gain must be >= 1 for the apa device");
  if (cfg.kind == DeviceKind::npa && !(cfg.noise >= 0.0))
    throw DomainError("DeviceConfig: added noise must be >= 0 for the npa device");
}

DeviceOutcome run_device(const DeviceConfig& cfg) {
  auto device = device_output_state(cfg);
  FockDensityMatrix& state = device.subtracted.state;
  DeviceOutcome outcome;
  outcome.gain = device_gain(state, cfg.alpha, cfg.policy);
  outcome.fidelity_at_gain = fidelity_to_coherent(state, outcome.gain.amplitude_gain, cfg.alpha);
  outcome.phase_var = phase_variance(state, cfg.policy);
  outcome.success_weight = device.subtracted.success_weight;
  outcome.front_end_tail_mass = device.front_end_tail;
  outcome.state = std::move(state);
  return outcome;
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 2) throw DomainError("linspace: count must be >= 2");
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) grid[i] = start + (stop - start) * i / (count - 1);
  grid.back() = stop;
  return grid;
}

std::vector<double> default_noise_grid(DeviceKind kind) {
  return kind == DeviceKind::apa ? linspace(1.0, 6.0, 101) : linspace(0.0, 5.0, 101);
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  const int count = static_cast<int>(spec.grid.size());
  if (count == 0) throw DomainError("sweep: empty grid");
  for (int i = 1; i < count; ++i)
    if (!(spec.grid[i] > spec.grid[i - 1]))
      throw DomainError("sweep: grid must be strictly increasing");

  std::vector<SweepRow> rows(count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    SweepRow& row = rows[i];
    row.noise = spec.grid[i];
    DeviceConfig cfg = spec.base;
    cfg.noise = spec.grid[i];
    try {
      const DeviceOutcome outcome = run_device(cfg);
      row.amplitude_gain = outcome.gain.amplitude_gain;
      row.nominal_amplitude = outcome.gain.amplitude_gain * cfg.alpha;
      row.fidelity = outcome.fidelity_at_gain;
      row.phase_variance = outcome.phase_var;
      row.success_weight = outcome.success_weight;
      row.tail_mass = outcome.front_end_tail_mass;
    } catch (const std::exception& e) {
      row.amplitude_gain = row.nominal_amplitude = row.fidelity = kNan;
      row.phase_variance = row.success_weight = row.tail_mass = kNan;
      row.error = e.what();
    }
  }
  return rows;
}

MinimizeResult minimize_phase_variance(DeviceKind kind, double alpha, int subtractions,
                                       const NumericsPolicy& policy,
                                       const std::vector<double>& grid) {
  if (subtractions < 1)
    throw DomainError("minimize_phase_variance: needs at least one subtraction");
  const Objective objective = [&](double noise) {
    const DeviceConfig cfg{kind, alpha, noise, subtractions, policy};
    return phase_variance(device_output_state(cfg).subtracted.state, policy);
  };
  return minimize_over_noise(kind, objective, policy, grid);
}

double discrimination_fidelity(const DeviceConfig& cfg) {
  const FockDensityMatrix plus = device_output_state(cfg).subtracted.state;
  return uhlmann_fidelity(plus, parity_flip(plus), cfg.policy);
}

MinimizeResult minimize_discrimination(DeviceKind kind, double alpha, int subtractions,
                                       const NumericsPolicy& policy,
                                       const std::vector<double>& grid) {
  const Objective objective = [&](double noise) {
    return discrimination_fidelity({kind, alpha, noise, subtractions, policy});
  };
  return minimize_over_noise(kind, objective, policy, grid);
}

FockDensityMatrix parity_flip(const FockDensityMatrix& rho) {
  FockDensityMatrix out(rho.dim());
  for (int n = 0; n < rho.dim(); ++n)
    for (int m = 0; m < rho.dim(); ++m) out(n, m) = ((n + m) & 1) ? -rho(n, m) : rho(n, m);
  return out;
}

}  // namespace qamp
