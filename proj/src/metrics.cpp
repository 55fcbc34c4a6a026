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

#include "qamp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qamp/linalg.hpp"
#include "qamp/optimize.hpp"

namespace qamp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBetaFloor = 1e-6;

// sqrt of a PSD Hermitian matrix via eigendecomposition; negative
// eigenvalues are clamped at zero and their total mass is policed.
std::vector<complexd> psd_sqrt(std::span<const complexd> a, int dim, double psd_tol,
                               const char* caller) {
  const auto es = linalg::eigen_hermitian(a, dim);
  double clamped = 0.0;
  std::vector<double> roots(dim);
  for (int k = 0; k < dim; ++k) {
    if (es.values[k] < 0.0) {
      clamped += -es.values[k];
      roots[k] = 0.0;
    } else {
      roots[k] = std::sqrt(es.values[k]);
    }
  }
  if (clamped > 10.0 * psd_tol)
    throw NumericsError(std::string(caller) + ": clamped negative eigenvalue mass " +
                        std::to_string(clamped) + " exceeds 10*psd_tol");
  return linalg::apply_spectral(es, roots);
}

}  // namespace

GainResult device_gain(const FockDensityMatrix& rho_out, double alpha_in,
                       const NumericsPolicy& policy) {
  if (!(alpha_in > 0.0)) throw DomainError("device_gain: alpha_in must be > 0");

  const double lo = kBetaFloor;
  const double hi = policy.gain_bracket_max * alpha_in;
  const auto overlap = [&](double beta) { return coherent_overlap(rho_out, beta); };

  // coarse pass guards against flat stretches before the local refinement
  constexpr int kCoarse = 64;
  std::vector<double> xs(kCoarse), fs(kCoarse);
  int best = 0;
  for (int i = 0; i < kCoarse; ++i) {
    xs[i] = lo + (hi - lo) * i / (kCoarse - 1);
    fs[i] = overlap(xs[i]);
    if (fs[i] > fs[best]) best = i;
  }
  if (best == 0)
    throw OptimizationError("device_gain: overlap maximum at the lower bracket edge");
  if (best == kCoarse - 1)
    throw OptimizationError(
        "device_gain: overlap maximum at the upper bracket edge; raise gain_bracket_max");

  GainResult result;
  result.beta_star =
      golden_section_max(overlap, xs[best - 1], xs[best + 1], policy.optimizer_tol);
  result.overlap_at_max = overlap(result.beta_star);
  result.amplitude_gain = result.beta_star / alpha_in;
  return result;
}

double fidelity_to_coherent(const FockDensityMatrix& rho, double gain, double alpha) {
  return coherent_overlap(rho, gain * alpha);
}

double phase_variance(const FockDensityMatrix& rho, const NumericsPolicy& policy) {
  const int dim = rho.dim();
  for (int n = 0; n < dim; ++n)
    for (int m = 0; m < dim; ++m)
      if (std::abs(rho(n, m).imag()) > policy.herm_tol)
        throw DomainError("phase_variance: state has complex elements (mean phase not zero)");

  // V = sum_{n,m} [ pi^2/3 delta_nm + (1-delta_nm) 2 (-1)^(m-n)/(m-n)^2 ] rho[n][m],
  // the window variance of P(phi) = (1/2pi) sum_{n,m} rho[n][m] e^{-i(n-m)phi}.
  // Each off-diagonal pair carries (1/2pi) int phi^2 e^{-i d phi} dphi = 2 (-1)^d / d^2.
  double var = 0.0;
  for (int n = 0; n < dim; ++n) {
    var += kPi * kPi / 3.0 * rho(n, n).real();
    for (int m = 0; m < dim; ++m) {
      if (m == n) continue;
      const int d = m - n;
      const double sign = (d & 1) ? -1.0 : 1.0;
      var += 2.0 * sign / (double(d) * double(d)) * rho(n, m).real();
    }
  }
  return var;
}

double uhlmann_fidelity(const FockDensityMatrix& rho, const FockDensityMatrix& sigma,
                        const NumericsPolicy& policy) {
  if (rho.dim() != sigma.dim()) throw DomainError("uhlmann_fidelity: dimension mismatch");
  const int dim = rho.dim();

  const auto root = psd_sqrt(rho.data(), dim, policy.psd_tol, "uhlmann_fidelity(rho)");
  auto inner = linalg::matmul(root, sigma.data(), dim);
  inner = linalg::matmul(inner, root, dim);
  for (int n = 0; n < dim; ++n)
    for (int m = n; m < dim; ++m) {
      const complexd avg = 0.5 * (inner[n * dim + m] + std::conj(inner[m * dim + n]));
      inner[n * dim + m] = avg;
      inner[m * dim + n] = std::conj(avg);
    }

  const auto es = linalg::eigen_hermitian(inner, dim);
  double clamped = 0.0;
  double trace_root = 0.0;
  for (double v : es.values) {
    if (v < 0.0)
      clamped += -v;
    else
      trace_root += std::sqrt(v);
  }
  if (clamped > 10.0 * policy.psd_tol)
    throw NumericsError("uhlmann_fidelity: clamped negative eigenvalue mass " +
                        std::to_string(clamped) + " exceeds 10*psd_tol");
  return trace_root * trace_root;
}

}  // namespace qamp
