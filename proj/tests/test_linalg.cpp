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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qamp/linalg.hpp"

using namespace qamp;
using namespace qamp::linalg;

namespace {

std::vector<complexd> random_hermitian(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<complexd> a(static_cast<std::size_t>(dim) * dim);
  for (int n = 0; n < dim; ++n) {
    a[n * dim + n] = uni(rng);
    for (int m = n + 1; m < dim; ++m) {
      const complexd z{uni(rng), uni(rng)};
      a[n * dim + m] = z;
      a[m * dim + n] = std::conj(z);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("log_factorial and log_binomial") {
  CHECK(log_factorial(0) == doctest::Approx(0.0));
  CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)));
  CHECK(log_factorial(170) == doctest::Approx(std::lgamma(171.0)));
  CHECK(log_binomial(6, 2) == doctest::Approx(std::log(15.0)));
  CHECK(log_binomial(63, 31) ==
        doctest::Approx(std::lgamma(64.0) - std::lgamma(32.0) - std::lgamma(33.0)).epsilon(1e-12));
  CHECK_THROWS(log_binomial(3, 4));
}

TEST_CASE("eigen_hermitian diagonalizes known 2x2") {
  // [[1, i],[-i, 1]] has eigenvalues 0 and 2
  std::vector<complexd> a{1.0, complexd{0.0, 1.0}, complexd{0.0, -1.0}, 1.0};
  const auto es = eigen_hermitian(a, 2);
  CHECK(es.values[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(es.values[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("eigen_hermitian reconstructs random matrices") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const int dim = 24;
    const auto a = random_hermitian(dim, seed);
    const auto es = eigen_hermitian(a, dim);
    // A = V diag(values) V^dagger
    double worst = 0.0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        complexd s{0.0, 0.0};
        for (int k = 0; k < dim; ++k)
          s += es.vectors[i * dim + k] * es.values[k] * std::conj(es.vectors[j * dim + k]);
        worst = std::max(worst, std::abs(s - a[i * dim + j]));
      }
    CHECK(worst < 1e-11);
    for (int k = 1; k < dim; ++k) CHECK(es.values[k] >= es.values[k - 1]);
  }
}

TEST_CASE("eigenvectors are orthonormal") {
  const int dim = 16;
  const auto a = random_hermitian(dim, 7u);
  const auto es = eigen_hermitian(a, dim);
  for (int k = 0; k < dim; ++k)
    for (int l = 0; l < dim; ++l) {
      complexd s{0.0, 0.0};
      for (int i = 0; i < dim; ++i)
        s += std::conj(es.vectors[i * dim + k]) * es.vectors[i * dim + l];
      CHECK(std::abs(s - (k == l ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("matrix_exponential basics") {
  // exp(0) = I
  std::vector<complexd> zero(9, complexd{0.0, 0.0});
  const auto ident = matrix_exponential(zero, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(ident[i * 3 + j] - (i == j ? 1.0 : 0.0)) < 1e-15);

  // exp of a real antisymmetric generator is a rotation
  const double theta = 0.7;
  std::vector<complexd> gen{0.0, -theta, theta, 0.0};
  const auto rot = matrix_exponential(gen, 2);
  CHECK(rot[0].real() == doctest::Approx(std::cos(theta)).epsilon(1e-13));
  CHECK(rot[1].real() == doctest::Approx(-std::sin(theta)).epsilon(1e-13));
  CHECK(rot[2].real() == doctest::Approx(std::sin(theta)).epsilon(1e-13));

  // nilpotent: exp([[0,1],[0,0]]) = [[1,1],[0,1]]
  std::vector<complexd> nil{0.0, 1.0, 0.0, 0.0};
  const auto expn = matrix_exponential(nil, 2);
  CHECK(std::abs(expn[1] - complexd{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(expn[2]) < 1e-15);
}

TEST_CASE("matmul small sanity") {
  std::vector<complexd> a{1.0, 2.0, 3.0, 4.0};
  std::vector<complexd> b{0.0, 1.0, 1.0, 0.0};
  const auto c = matmul(a, b, 2);
  CHECK(c[0] == complexd{2.0, 0.0});
  CHECK(c[1] == complexd{1.0, 0.0});
  CHECK(c[2] == complexd{4.0, 0.0});
  CHECK(c[3] == complexd{3.0, 0.0});
}
