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

#include <complex>

namespace qamp {

using complexd = std::complex<double>;

/// Complex field amplitude. Device front ends restrict inputs to real
/// alpha >= 0; the state constructors accept any complex value.
using CoherentAmplitude = complexd;

/// Numerical knobs shared by every state constructor, channel and metric.
struct NumericsPolicy {
  int dim = 64;                    // Fock basis cutoff, indices 0..dim-1
  double herm_tol = 1e-10;
  double trace_tol = 1e-10;
  double psd_tol = 1e-8;
  double tail_tol = 1e-4;          // bound on the witness element rho[N-1][N-1]
  double gain_bracket_max = 12.0;  // gain search runs over beta in (0, gain_bracket_max*alpha]
  double optimizer_tol = 1e-6;

  bool valid() const {
    return dim >= 8 && herm_tol > 0 && trace_tol > 0 && psd_tol > 0 &&
           tail_tol > 0 && gain_bracket_max > 0 && optimizer_tol > 0;
  }
};

}  // namespace qamp
