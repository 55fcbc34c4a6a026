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

// Dense complex linear algebra for matrices up to a few hundred rows:
// Jacobi eigensolver for Hermitian matrices, multiplication, exponential.

#pragma once

#include <span>
#include <vector>

#include "qamp/policy.hpp"

namespace qamp::linalg {

struct HermitianEigen {
  int dim = 0;
  std::vector<double> values;      // ascending
  std::vector<complexd> vectors;   // row-major; column k is the k-th eigenvector
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix (row-major, dim x dim).
HermitianEigen eigen_hermitian(std::span<const complexd> a, int dim);

double min_eigenvalue(std::span<const complexd> a, int dim);

/// c = a * b, all row-major dim x dim.
std::vector<complexd> matmul(std::span<const complexd> a, std::span<const complexd> b, int dim);

/// V f(D) V^dagger for the eigensystem of a Hermitian matrix.
std::vector<complexd> apply_spectral(const HermitianEigen& es, std::span<const double> f_of_values);

/// exp(a) by scaling and squaring with a truncated Taylor series.
std::vector<complexd> matrix_exponential(std::span<const complexd> a, int dim);

/// log(n!) via lgamma, table-backed.
double log_factorial(int n);

/// log C(n,k); requires 0 <= k <= n.
double log_binomial(int n, int k);

}  // namespace qamp::linalg
