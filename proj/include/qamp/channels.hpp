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

// The two state transformations of the device: the optimal phase-insensitive
// linear amplifier and conditional photon subtraction, plus the noise-powered
// front end (displaced thermal noise addition).

#pragma once

#include "qamp/fock.hpp"
#include "qamp/policy.hpp"

namespace qamp {

struct AmplifierParams {
  double intensity_gain = 1.0;  // G >= 1; adds at minimum nbar = G-1 noise photons
};

struct SubtractionParams {
  int count = 0;  // M in [0, 8]
};

struct SubtractionResult {
  FockDensityMatrix state;
  double success_weight = 1.0;  // product of the M pre-normalization traces
};

/// Output of a perfectly-inverted amplifier of intensity gain G.
///
///   rho_out[n][m] = G^-(n+m+2)/2 * sum_p sqrt(C(n,p) C(m,m-n+p))
///                   * (G-1)^(n-p) * rho_in[p][m-n+p]
///
/// with the sum over max(0, n-m) <= p <= n so both binomials are in range.
/// Every term carries a nonnegative power of (G-1), so G = 1 reduces to the
/// identity without special-casing. Coefficients are evaluated in log space.
/// OpenMP-parallel over output rows; bit-identical to amplify_reference.
FockDensityMatrix amplify(const FockDensityMatrix& rho_in, AmplifierParams params,
                          const NumericsPolicy& policy);

/// Serial reference for amplify; same element kernel, no threading.
FockDensityMatrix amplify_reference(const FockDensityMatrix& rho_in, AmplifierParams params,
                                    const NumericsPolicy& policy);

/// M successive photon subtractions:
///   rho[n][m] <- sqrt((n+1)(m+1)) rho[n+1][m+1],  renormalized each step.
/// success_weight is the product of the per-step traces Tr(a rho a^dagger).
SubtractionResult subtract_photons(const FockDensityMatrix& rho, SubtractionParams params);

/// Noise-powered front end: thermal noise of mean nbar displaced in phase
/// space by the input amplitude. Equals displaced_thermal(alpha, nbar).
FockDensityMatrix npa_front_end(CoherentAmplitude alpha, double nbar,
                                const NumericsPolicy& policy);

}  // namespace qamp
