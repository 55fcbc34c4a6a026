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

// Scalar figures of merit: nominal amplitude gain, fidelity against a
// coherent target, windowed phase variance and mixed-state fidelity.

#pragma once

#include "qamp/fock.hpp"
#include "qamp/policy.hpp"

namespace qamp {

struct GainResult {
  double amplitude_gain = 0.0;  // g = beta_star / alpha_in
  double beta_star = 0.0;       // argmax over real beta of <beta|rho|beta>
  double overlap_at_max = 0.0;
  bool at_bracket_edge = false;  // only ever set by the brute-force scan
};

/// Amplitude of the coherent state with maximum overlap with rho, relative
/// to the input amplitude. Coarse 64-point grid pass over
/// (1e-6, gain_bracket_max*alpha_in], then golden-section refinement to
/// optimizer_tol. Throws OptimizationError when the maximum sits at either
/// bracket edge.
GainResult device_gain(const FockDensityMatrix& rho_out, double alpha_in,
                       const NumericsPolicy& policy);

/// F = <g alpha| rho |g alpha>.
double fidelity_to_coherent(const FockDensityMatrix& rho, double gain, double alpha);

/// Phase variance in the window (-pi, pi] of a zero-mean-phase state:
///   sum_{n,m} [ pi^2/3 delta_nm + (1-delta_nm) (-1)^(m-n)/(m-n)^2 ] rho[n][m]
/// Requires real elements (imaginary parts within herm_tol), else DomainError.
double phase_variance(const FockDensityMatrix& rho, const NumericsPolicy& policy);

/// Mixed-state fidelity [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2. Eigenvalues
/// are clamped at zero before each square root; NumericsError if the clamped
/// negative mass exceeds 10*psd_tol.
double uhlmann_fidelity(const FockDensityMatrix& rho, const FockDensityMatrix& sigma,
                        const NumericsPolicy& policy);

}  // namespace qamp
