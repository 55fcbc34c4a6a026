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

#include "qamp/channels.hpp"

#include <cmath>
#include <string>

#include "qamp/linalg.hpp"

namespace qamp {

namespace {

// One output element of the amplifier map. The global (G-1)^((n+m)/2)
// prefactor has been folded into the per-term denominator, leaving the
// nonnegative power (G-1)^(n-p); at G = 1 only the p = n term survives.
complexd amplifier_element(const FockDensityMatrix& in, int n, int m, double ln_g,
                           double ln_gm1) {
  complexd acc{0.0, 0.0};
  const int p_min = std::max(0, n - m);
  for (int p = p_min; p <= n; ++p) {
    const int q = m - n + p;
    double lc = 0.5 * (linalg::log_binomial(n, p) + linalg::log_binomial(m, q)) -
                0.5 * (n + m + 2) * ln_g;
    if (p != n) lc += (n - p) * ln_gm1;
    acc += std::exp(lc) * in(p, q);
  }
  return acc;
}

void check_amplifier(const FockDensityMatrix& in, AmplifierParams params,
                     const NumericsPolicy& policy) {
  const double g = params.intensity_gain;
  if (!(g >= 1.0)) throw DomainError("amplify: intensity gain must be >= 1");
  if (in.dim() != policy.dim) throw DomainError("amplify: state dim does not match policy");

  // The output diagonal depends on the input diagonal alone, so the output
  // witness element is cheap to predict exactly before the O(dim^3) pass.
  const int top = policy.dim - 1;
  const double ln_g = std::log(g);
  const double ln_gm1 = std::log(g - 1.0);
  double predicted = 0.0;
  for (int p = 0; p <= top; ++p) {
    double lc = linalg::log_binomial(top, p) - (top + 1) * ln_g;
    if (p != top) lc += (top - p) * ln_gm1;
    predicted += std::exp(lc) * in(p, p).real();
  }
  if (predicted > policy.tail_tol)
    throw TruncationError("amplify: predicted output tail mass " + std::to_string(predicted) +
                          " exceeds tail tolerance " + std::to_string(policy.tail_tol) +
                          "; increase dim");
}

}  // namespace

FockDensityMatrix amplify(const FockDensityMatrix& rho_in, AmplifierParams params,
                          const NumericsPolicy& policy) {
  check_amplifier(rho_in, params, policy);
  const int dim = rho_in.dim();
  const double ln_g = std::log(params.intensity_gain);
  const double ln_gm1 = std::log(params.intensity_gain - 1.0);

  FockDensityMatrix out(dim);
#pragma omp parallel for schedule(dynamic)
  for (int n = 0; n < dim; ++n)
    for (int m = 0; m < dim; ++m) out(n, m) = amplifier_element(rho_in, n, m, ln_g, ln_gm1);

  out.hermitize();
  return out;
}

FockDensityMatrix amplify_reference(const FockDensityMatrix& rho_in, AmplifierParams params,
                                    const NumericsPolicy& policy) {
  check_amplifier(rho_in, params, policy);
  const int dim = rho_in.dim();
  const double ln_g = std::log(params.intensity_gain);
  const double ln_gm1 = std::log(params.intensity_gain - 1.0);

  FockDensityMatrix out(dim);
  for (int n = 0; n < dim; ++n)
    for (int m = 0; m < dim; ++m) out(n, m) = amplifier_element(rho_in, n, m, ln_g, ln_gm1);

  out.hermitize();
  return out;
}

SubtractionResult subtract_photons(const FockDensityMatrix& rho, SubtractionParams params) {
  if (params.count < 0 || params.count > 8)
    throw DomainError("subtract_photons: count must be in [0, 8]");

  SubtractionResult result{rho, 1.0};
  const int dim = rho.dim();
  for (int step = 0; step < params.count; ++step) {
    // Tr(a rho a^dagger) = sum_n (n+1) rho[n+1][n+1]
    double w = 0.0;
    for (int n = 0; n + 1 < dim; ++n) w += (n + 1) * result.state(n + 1, n + 1).real();
    if (w < 1e-14)
      throw ZeroNormError("subtract_photons: conditioning trace " + std::to_string(w) +
                          " below 1e-14 at step " + std::to_string(step + 1));

    FockDensityMatrix next(dim);
    for (int n = 0; n + 1 < dim; ++n)
      for (int m = 0; m + 1 < dim; ++m)
        next(n, m) = std::sqrt(double(n + 1) * double(m + 1)) * result.state(n + 1, m + 1) / w;
    result.state = std::move(next);
    result.success_weight *= w;
  }
  return result;
}

FockDensityMatrix npa_front_end(CoherentAmplitude alpha, double nbar,
                                const NumericsPolicy& policy) {
  return displaced_thermal(alpha, nbar, policy);
}

}  // namespace qamp
