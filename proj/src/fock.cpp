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

#include "qamp/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qamp/linalg.hpp"

namespace qamp {

namespace {

void check_policy(const NumericsPolicy& policy) {
  if (!policy.valid()) throw DomainError("NumericsPolicy: tolerances must be positive, dim >= 8");
}

[[noreturn]] void throw_tail(const char* what, double tail, double tol) {
  throw TruncationError(std::string(what) + ": witness tail mass " + std::to_string(tail) +
                        " exceeds tail tolerance " + std::to_string(tol) +
                        "; increase dim");
}

}  // namespace

double FockDensityMatrix::trace() const {
  double t = 0.0;
  for (int n = 0; n < dim_; ++n) t += (*this)(n, n).real();
  return t;
}

double FockDensityMatrix::tail_mass() const { return (*this)(dim_ - 1, dim_ - 1).real(); }

void FockDensityMatrix::renormalize() {
  const double t = trace();
  if (!(t > 0.0)) throw ZeroNormError("renormalize: nonpositive trace");
  const double inv = 1.0 / t;
  for (auto& z : elems_) z *= inv;
}

void FockDensityMatrix::hermitize() {
  for (int n = 0; n < dim_; ++n) {
    (*this)(n, n) = complexd{(*this)(n, n).real(), 0.0};
    for (int m = n + 1; m < dim_; ++m) {
      const complexd avg = 0.5 * ((*this)(n, m) + std::conj((*this)(m, n)));
      (*this)(n, m) = avg;
      (*this)(m, n) = std::conj(avg);
    }
  }
}

std::vector<complexd> coherent_amplitudes(CoherentAmplitude beta, int dim) {
  std::vector<complexd> c(dim);
  const double r = std::abs(beta);
  if (r == 0.0) {
    c[0] = 1.0;
    return c;
  }
  const double theta = std::arg(beta);
  const double lr = std::log(r);
  for (int n = 0; n < dim; ++n) {
    // <n|beta> = e^{-r^2/2} r^n e^{i n theta} / sqrt(n!)
    const double mag = std::exp(-0.5 * r * r + n * lr - 0.5 * linalg::log_factorial(n));
    c[n] = std::polar(mag, n * theta);
  }
  return c;
}

FockDensityMatrix coherent_state(CoherentAmplitude alpha, const NumericsPolicy& policy) {
  check_policy(policy);
  const int dim = policy.dim;
  const auto c = coherent_amplitudes(alpha, dim);
  const double tail = std::norm(c[dim - 1]);
  if (tail > policy.tail_tol) throw_tail("coherent_state", tail, policy.tail_tol);

  FockDensityMatrix rho(dim);
  for (int p = 0; p < dim; ++p)
    for (int q = 0; q < dim; ++q) rho(p, q) = c[p] * std::conj(c[q]);
  rho.renormalize();
  return rho;
}

FockDensityMatrix thermal_state(double nbar, const NumericsPolicy& policy) {
  check_policy(policy);
  if (nbar < 0.0) throw DomainError("thermal_state: nbar must be >= 0");
  const int dim = policy.dim;
  FockDensityMatrix rho(dim);
  if (nbar == 0.0) {
    rho(0, 0) = 1.0;
    return rho;
  }
  // P(n) = nbar^n / (nbar+1)^(n+1)
  const double ln_ratio = std::log(nbar) - std::log(nbar + 1.0);
  for (int n = 0; n < dim; ++n) rho(n, n) = std::exp(n * ln_ratio - std::log(nbar + 1.0));
  const double tail = rho.tail_mass();
  if (tail > policy.tail_tol) throw_tail("thermal_state", tail, policy.tail_tol);
  rho.renormalize();
  return rho;
}

FockDensityMatrix displaced_thermal(CoherentAmplitude alpha, double nbar,
                                    const NumericsPolicy& policy) {
  check_policy(policy);
  if (nbar < 0.0) throw DomainError("displaced_thermal: nbar must be >= 0");
  const double r = std::abs(alpha);
  if (nbar == 0.0) return coherent_state(alpha, policy);
  if (r == 0.0) return thermal_state(nbar, policy);

  const int dim = policy.dim;
  const double theta = std::arg(alpha);
  const double lr = std::log(r);
  const double lnb = std::log(nbar);
  const double lnb1 = std::log(nbar + 1.0);
  const double log_prefactor = -r * r / (nbar + 1.0) - lnb1;

  // rho[n][m] = e^{i theta (n-m)} * pref * sqrt(n! m!) *
  //   sum_j r^(n+m-2j) nbar^j / (j! (n-j)! (m-j)! (nbar+1)^(n+m-j))
  FockDensityMatrix rho(dim);
#pragma omp parallel for schedule(dynamic)
  for (int n = 0; n < dim; ++n) {
    for (int m = n; m < dim; ++m) {
      const int jmax = n;  // n <= m here
      double max_log = -1e300;
      std::vector<double> logs(jmax + 1);
      for (int j = 0; j <= jmax; ++j) {
        double L = log_prefactor + 0.5 * (linalg::log_factorial(n) + linalg::log_factorial(m)) -
                   linalg::log_factorial(j) - linalg::log_factorial(n - j) -
                   linalg::log_factorial(m - j) + (n + m - 2 * j) * lr + j * lnb -
                   (n + m - j) * lnb1;
        logs[j] = L;
        max_log = std::max(max_log, L);
      }
      double s = 0.0;
      for (int j = 0; j <= jmax; ++j) s += std::exp(logs[j] - max_log);
      const double mag = std::exp(max_log) * s;
      const complexd val = std::polar(mag, theta * (n - m));
      rho(n, m) = val;
      if (m != n) rho(m, n) = std::conj(val);
    }
  }

  const double tail = rho.tail_mass();
  if (tail > policy.tail_tol) throw_tail("displaced_thermal", tail, policy.tail_tol);
  rho.renormalize();
  return rho;
}

double mean_photon_number(const FockDensityMatrix& rho) {
  double s = 0.0;
  for (int n = 0; n < rho.dim(); ++n) s += n * rho(n, n).real();
  return s;
}

double coherent_overlap(const FockDensityMatrix& rho, CoherentAmplitude beta) {
  const auto c = coherent_amplitudes(beta, rho.dim());
  complexd s{0.0, 0.0};
  for (int n = 0; n < rho.dim(); ++n) {
    complexd row{0.0, 0.0};
    for (int m = 0; m < rho.dim(); ++m) row += rho(n, m) * c[m];
    s += std::conj(c[n]) * row;
  }
  return s.real();
}

ValidationReport validate(const FockDensityMatrix& rho, const NumericsPolicy& policy) {
  ValidationReport report;
  report.trace_deviation = std::abs(rho.trace() - 1.0);
  double herm = 0.0;
  for (int n = 0; n < rho.dim(); ++n)
    for (int m = n; m < rho.dim(); ++m)
      herm = std::max(herm, std::abs(rho(n, m) - std::conj(rho(m, n))));
  report.max_hermiticity_violation = herm;
  report.min_eigenvalue = linalg::min_eigenvalue(rho.data(), rho.dim());
  report.tail_mass = rho.tail_mass();

  report.trace_ok = report.trace_deviation <= policy.trace_tol;
  report.hermitian_ok = report.max_hermiticity_violation <= policy.herm_tol;
  report.positive_ok = report.min_eigenvalue >= -policy.psd_tol;
  report.tail_ok = report.tail_mass <= policy.tail_tol;
  return report;
}

double max_elementwise_diff(const FockDensityMatrix& a, const FockDensityMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("max_elementwise_diff: dimension mismatch");
  double d = 0.0;
  for (int n = 0; n < a.dim(); ++n)
    for (int m = 0; m < a.dim(); ++m) d = std::max(d, std::abs(a(n, m) - b(n, m)));
  return d;
}

}  // namespace qamp
