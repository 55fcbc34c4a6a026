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

#include "qamp/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qamp/linalg.hpp"

namespace qamp::oracle {

namespace {

std::size_t idx(int n, int m, int dim) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(dim) +
         static_cast<std::size_t>(m);
}

std::vector<complexd> conjugate_transpose(const std::vector<complexd>& a, int dim) {
  std::vector<complexd> t(a.size());
  for (int n = 0; n < dim; ++n)
    for (int m = 0; m < dim; ++m) t[idx(n, m, dim)] = std::conj(a[idx(m, n, dim)]);
  return t;
}

}  // namespace

FockDensityMatrix displacement_exponential_state(CoherentAmplitude alpha, double nbar,
                                                 const NumericsPolicy& policy) {
  if (nbar < 0.0) throw DomainError("displacement_exponential_state: nbar must be >= 0");
  const int dim = policy.dim;
  const int work = 2 * dim;

  // generator alpha a^dagger - conj(alpha) a on the working basis
  std::vector<complexd> gen(static_cast<std::size_t>(work) * work, complexd{0.0, 0.0});
  for (int n = 0; n + 1 < work; ++n) {
    const double root = std::sqrt(n + 1.0);
    gen[idx(n + 1, n, work)] += alpha * root;
    gen[idx(n, n + 1, work)] -= std::conj(alpha) * root;
  }
  const auto displacement = linalg::matrix_exponential(gen, work);

  std::vector<complexd> thermal(static_cast<std::size_t>(work) * work, complexd{0.0, 0.0});
  if (nbar == 0.0) {
    thermal[0] = 1.0;
  } else {
    double norm = 0.0;
    for (int n = 0; n < work; ++n) {
      const double p = std::exp(n * (std::log(nbar) - std::log(nbar + 1.0)) - std::log(nbar + 1.0));
      thermal[idx(n, n, work)] = p;
      norm += p;
    }
    for (int n = 0; n < work; ++n) thermal[idx(n, n, work)] /= norm;
  }

  auto displaced = linalg::matmul(displacement, thermal, work);
  displaced = linalg::matmul(displaced, conjugate_transpose(displacement, work), work);

  FockDensityMatrix out(dim);
  for (int n = 0; n < dim; ++n)
    for (int m = 0; m < dim; ++m) out(n, m) = displaced[idx(n, m, work)];
  const double tail = out.tail_mass();
  if (tail > policy.tail_tol)
    throw TruncationError("displacement_exponential_state: witness tail mass " +
                          std::to_string(tail) + " exceeds tail tolerance " +
                          std::to_string(policy.tail_tol));
  out.hermitize();
  out.renormalize();
  return out;
}

SubtractionResult lowering_sandwich(const FockDensityMatrix& rho, int subtractions) {
  if (subtractions < 0 || subtractions > 8)
    throw DomainError("lowering_sandwich: count must be in [0, 8]");
  if (subtractions == 0) return {rho, 1.0};
  const int dim = rho.dim();

  std::vector<complexd> lowering(static_cast<std::size_t>(dim) * dim, complexd{0.0, 0.0});
  for (int n = 0; n + 1 < dim; ++n) lowering[idx(n, n + 1, dim)] = std::sqrt(n + 1.0);
  const auto raising = conjugate_transpose(lowering, dim);

  std::vector<complexd> current(rho.data().begin(), rho.data().end());
  double previous_trace = 1.0;
  double weight = 1.0;
  for (int step = 0; step < subtractions; ++step) {
    current = linalg::matmul(lowering, current, dim);
    current = linalg::matmul(current, raising, dim);
    double trace = 0.0;
    for (int n = 0; n < dim; ++n) trace += current[idx(n, n, dim)].real();
    const double step_weight = trace / previous_trace;
    if (step_weight < 1e-14)
      throw ZeroNormError("lowering_sandwich: conditioning trace below 1e-14 at step " +
                          std::to_string(step + 1));
    weight *= step_weight;
    previous_trace = trace;
  }

  FockDensityMatrix state(dim);
  for (int n = 0; n < dim; ++n)
    for (int m = 0; m < dim; ++m) state(n, m) = current[idx(n, m, dim)] / previous_trace;
  return {std::move(state), weight};
}

GainResult brute_force_overlap_max(const FockDensityMatrix& rho, double alpha_in,
                                   int grid_points, const NumericsPolicy& policy) {
  if (grid_points < 1000) throw DomainError("brute_force_overlap_max: need >= 1000 grid points");
  if (!(alpha_in > 0.0)) throw DomainError("brute_force_overlap_max: alpha_in must be > 0");

  const double lo = 1e-6;
  const double hi = policy.gain_bracket_max * alpha_in;
  const double h = (hi - lo) / (grid_points - 1);

  std::vector<double> values(grid_points);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid_points; ++i) values[i] = coherent_overlap(rho, lo + h * i);

  int best = 0;
  for (int i = 1; i < grid_points; ++i)
    if (values[i] > values[best]) best = i;

  GainResult result;
  if (best == 0 || best == grid_points - 1) {
    result.at_bracket_edge = true;
    result.beta_star = lo + h * best;
    result.overlap_at_max = values[best];
    result.amplitude_gain = result.beta_star / alpha_in;
    return result;
  }

  // vertex of the parabola through the three points around the grid argmax
  const double f0 = values[best - 1], f1 = values[best], f2 = values[best + 1];
  const double denom = f0 - 2.0 * f1 + f2;
  double beta = lo + h * best;
  if (denom != 0.0) beta += 0.5 * h * (f0 - f2) / denom;
  result.beta_star = beta;
  result.overlap_at_max = coherent_overlap(rho, beta);
  result.amplitude_gain = beta / alpha_in;
  return result;
}

}  // namespace qamp::oracle
