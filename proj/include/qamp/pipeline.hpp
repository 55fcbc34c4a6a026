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

// Composition of the channels into the two devices (amplifier-powered and
// noise-powered conditional amplification), parameter sweeps, and the
// minimizers over the noise parameter.

#pragma once

#include <string>
#include <vector>

#include "qamp/channels.hpp"
#include "qamp/fock.hpp"
#include "qamp/metrics.hpp"
#include "qamp/policy.hpp"

namespace qamp {

enum class DeviceKind { apa, npa };

const char* device_name(DeviceKind kind);

/// amplifier-powered: noise is the intensity gain G >= 1
/// noise-powered:     noise is the added thermal mean nbar >= 0
struct DeviceConfig {
  DeviceKind kind = DeviceKind::apa;
  double alpha = 0.5;     // real input amplitude, > 0
  double noise = 1.0;     // G (apa) or nbar (npa)
  int subtractions = 1;   // M in [0, 8]
  NumericsPolicy policy{};
};

void validate_config(const DeviceConfig& cfg);

struct DeviceOutcome {
  FockDensityMatrix state;
  GainResult gain;
  double fidelity_at_gain = 0.0;  // overlap with |g alpha>
  double phase_var = 0.0;
  double success_weight = 1.0;
  // witness element of the front-end (pre-subtraction) state; subtraction
  // shifts the matrix down so the output's own top diagonal is zero
  double front_end_tail_mass = 0.0;
};

/// Run one device end to end: front end (amplifier or displaced noise),
/// then M photon subtractions, then all the scalar metrics.
DeviceOutcome run_device(const DeviceConfig& cfg);

struct SweepSpec {
  DeviceConfig base;
  std::vector<double> grid;  // strictly increasing noise values
};

struct SweepRow {
  double noise = 0.0;
  double amplitude_gain = 0.0;
  double nominal_amplitude = 0.0;  // g * alpha
  double fidelity = 0.0;
  double phase_variance = 0.0;
  double success_weight = 0.0;
  double tail_mass = 0.0;
  std::string error;  // empty when the point computed cleanly
};

/// One row per grid point, in grid order. Per-point failures are recorded
/// in the row and the sweep continues. Points run in parallel; the result
/// does not depend on thread count.
std::vector<SweepRow> sweep(const SweepSpec& spec);

/// Default noise grids: G in [1, 6] (apa), nbar in [0, 5] (npa), 101 points.
std::vector<double> default_noise_grid(DeviceKind kind);

std::vector<double> linspace(double start, double stop, int count);

struct MinimizeResult {
  double noise_star = 0.0;
  double objective_star = 0.0;
};

/// Minimum device phase variance over the noise parameter: full grid pass,
/// then golden-section refinement between the bracketing neighbors of the
/// grid minimum. A minimum at the upper grid edge raises OptimizationError;
/// a minimum at the lower edge (device off) is returned as is.
MinimizeResult minimize_phase_variance(DeviceKind kind, double alpha, int subtractions,
                                       const NumericsPolicy& policy,
                                       const std::vector<double>& grid = {});

/// Mixed-state fidelity between the device outputs for inputs +alpha and
/// -alpha; the -alpha output is obtained by the parity transform
/// rho[n][m] -> (-1)^(n+m) rho[n][m].
double discrimination_fidelity(const DeviceConfig& cfg);

MinimizeResult minimize_discrimination(DeviceKind kind, double alpha, int subtractions,
                                       const NumericsPolicy& policy,
                                       const std::vector<double>& grid = {});

/// rho[n][m] -> (-1)^(n+m) rho[n][m]; maps the output for +alpha to the
/// output for -alpha through either device.
FockDensityMatrix parity_flip(const FockDensityMatrix& rho);

}  // namespace qamp
