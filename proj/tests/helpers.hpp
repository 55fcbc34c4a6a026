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

#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

#include "qamp/fock.hpp"
#include "qamp/policy.hpp"

namespace qamp::test {

inline NumericsPolicy make_policy(int dim = 64) {
  NumericsPolicy policy;
  policy.dim = dim;
  return policy;
}

/// |n><n| on the truncated basis.
inline FockDensityMatrix fock_projector(int n, int dim) {
  FockDensityMatrix rho(dim);
  rho(n, n) = 1.0;
  return rho;
}

/// Quadrature oracle for the window phase variance: integrates phi^2 P(phi)
/// with P(phi) = (1/2pi) sum_{n,m} rho[n][m] e^{-i(n-m)phi} by the midpoint
/// rule. Independent of the closed-sum evaluation it certifies.
inline double quadrature_phase_variance(const FockDensityMatrix& rho, int steps = 4096) {
  const double pi = 3.14159265358979323846;
  double acc = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double phi = -pi + 2.0 * pi * (k + 0.5) / steps;
    std::complex<double> p{0.0, 0.0};
    for (int n = 0; n < rho.dim(); ++n)
      for (int m = 0; m < rho.dim(); ++m) p += rho(n, m) * std::polar(1.0, -(n - m) * phi);
    acc += phi * phi * p.real();
  }
  return acc / steps;
}

struct ScopedEnv {
  std::string key;
  std::string old_value;
  bool had_old;

  ScopedEnv(const std::string& k, const std::string& v) : key(k) {
    const char* old = std::getenv(key.c_str());
    had_old = (old != nullptr);
    if (had_old) old_value = old;
    setenv(key.c_str(), v.c_str(), 1);
  }

  ~ScopedEnv() {
    if (had_old)
      setenv(key.c_str(), old_value.c_str(), 1);
    else
      unsetenv(key.c_str());
  }
};

}  // namespace qamp::test
