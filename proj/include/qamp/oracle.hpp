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

// Slow, independent reference constructions used to certify the fast paths.
// Shipped (not test-only) so the CLI --verify flag can run both side by side.

#pragma once

#include "qamp/channels.hpp"
#include "qamp/fock.hpp"
#include "qamp/metrics.hpp"
#include "qamp/policy.hpp"

namespace qamp::oracle {

/// D rho_th D^dagger with D = exp(alpha a^dagger - conj(alpha) a) computed by
/// numerically exponentiating the generator at working dimension 2*dim, then
/// cropping to dim and renormalizing. Checks displaced_thermal and amplify.
FockDensityMatrix displacement_exponential_state(CoherentAmplitude alpha, double nbar,
                                                 const NumericsPolicy& policy);

/// Explicit matrix sandwich A^M rho (A^dagger)^M / Tr(.) with the lowering
/// matrix A[n][n+1] = sqrt(n+1). Checks subtract_photons.
SubtractionResult lowering_sandwich(const FockDensityMatrix& rho, int subtractions);

/// Dense uniform scan of <beta|rho|beta> over (0, gain_bracket_max*alpha_in],
/// grid argmax refined by a local quadratic fit. Checks device_gain; never
/// throws, an edge maximum is reported through GainResult::at_bracket_edge.
GainResult brute_force_overlap_max(const FockDensityMatrix& rho, double alpha_in,
                                   int grid_points, const NumericsPolicy& policy);

}  // namespace qamp::oracle
