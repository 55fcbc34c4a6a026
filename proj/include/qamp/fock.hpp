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

// Truncated number-basis density matrices and the basic states of the
// amplification model: coherent, thermal and displaced thermal.

#pragma once

#include <span>
#include <vector>

#include "qamp/errors.hpp"
#include "qamp/policy.hpp"

namespace qamp {

/// Density matrix rho[n][m] on the truncated Fock basis 0..dim-1,
/// stored dense row-major. Plain value type; all operations on it are
/// free functions and pure.
class FockDensityMatrix {
 public:
  FockDensityMatrix() = default;
  explicit FockDensityMatrix(int dim)
      : dim_(dim), elems_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
    if (dim < 1) throw DomainError("FockDensityMatrix: dim must be positive");
  }

  int dim() const { return dim_; }

  complexd& operator()(int n, int m) { return elems_[index(n, m)]; }
  const complexd& operator()(int n, int m) const { return elems_[index(n, m)]; }

  std::span<complexd> data() { return elems_; }
  std::span<const complexd> data() const { return elems_; }

  /// Sum of the real diagonal.
  double trace() const;

  /// Witness element Re rho[dim-1][dim-1]; small iff the cutoff is adequate.
  double tail_mass() const;

  /// Scale so that trace() == 1. Throws ZeroNormError if the trace is
  /// not positive.
  void renormalize();

  /// Replace by (rho + rho^dagger)/2.
  void hermitize();

 private:
  std::size_t index(int n, int m) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(m);
  }

  int dim_ = 0;
  std::vector<complexd> elems_;
};

/// Number-basis amplitudes <n|beta> of a coherent state, n = 0..dim-1.
std::vector<complexd> coherent_amplitudes(CoherentAmplitude beta, int dim);

/// Pure coherent state |alpha><alpha|, truncated and renormalized.
/// rho[p][q] = exp(-|alpha|^2) alpha^p conj(alpha)^q / sqrt(p! q!)
FockDensityMatrix coherent_state(CoherentAmplitude alpha, const NumericsPolicy& policy);

/// Chaotic (thermal) state, diagonal with P(n) = nbar^n / (nbar+1)^(n+1).
FockDensityMatrix thermal_state(double nbar, const NumericsPolicy& policy);

/// Thermal state of mean nbar displaced by alpha. Closed-form number-basis
/// elements (finite Laguerre-type sum); reduces to coherent_state at
/// nbar = 0 and to thermal_state at alpha = 0.
FockDensityMatrix displaced_thermal(CoherentAmplitude alpha, double nbar,
                                    const NumericsPolicy& policy);

/// <n_hat> = sum_n n rho[n][n].
double mean_photon_number(const FockDensityMatrix& rho);

/// <beta| rho |beta>, real and in [0,1] for a physical state.
double coherent_overlap(const FockDensityMatrix& rho, CoherentAmplitude beta);

/// Per-invariant diagnostics; reporting only, never throws.
struct ValidationReport {
  double trace_deviation = 0.0;
  double max_hermiticity_violation = 0.0;
  double min_eigenvalue = 0.0;
  double tail_mass = 0.0;
  bool trace_ok = false;
  bool hermitian_ok = false;
  bool positive_ok = false;
  bool tail_ok = false;
  bool ok() const { return trace_ok && hermitian_ok && positive_ok && tail_ok; }
};

ValidationReport validate(const FockDensityMatrix& rho, const NumericsPolicy& policy);

/// max_{n,m} |a[n][m] - b[n][m]|; matrices must share dim.
double max_elementwise_diff(const FockDensityMatrix& a, const FockDensityMatrix& b);

}  // namespace qamp
