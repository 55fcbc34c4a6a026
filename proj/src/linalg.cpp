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

#include "qamp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qamp::linalg {

namespace {

std::size_t idx(int n, int m, int dim) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(dim) +
         static_cast<std::size_t>(m);
}

double off_diagonal_norm_sq(const std::vector<complexd>& a, int dim) {
  double s = 0.0;
  for (int p = 0; p < dim; ++p)
    for (int q = p + 1; q < dim; ++q) s += std::norm(a[idx(p, q, dim)]);
  return s;
}

}  // namespace

double log_factorial(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(1024);
    for (int k = 0; k < static_cast<int>(t.size()); ++k) t[k] = std::lgamma(k + 1.0);
    return t;
  }();
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  if (n < static_cast<int>(table.size())) return table[n];
  return std::lgamma(n + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k out of range");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

HermitianEigen eigen_hermitian(std::span<const complexd> a_in, int dim) {
  if (static_cast<int>(a_in.size()) != dim * dim)
    throw std::invalid_argument("eigen_hermitian: size mismatch");

  std::vector<complexd> a(a_in.begin(), a_in.end());
  std::vector<complexd> v(static_cast<std::size_t>(dim) * dim, complexd{0.0, 0.0});
  for (int i = 0; i < dim; ++i) v[idx(i, i, dim)] = 1.0;

  double fro_sq = 0.0;
  for (const auto& z : a) fro_sq += std::norm(z);
  const double stop = std::max(fro_sq, 1e-300) * 1e-28;

  constexpr int kMaxSweeps = 60;
  const double skip_sq = stop / (2.0 * dim * dim);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (2.0 * off_diagonal_norm_sq(a, dim) <= stop) break;
    for (int p = 0; p < dim - 1; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        const complexd apq = a[idx(p, q, dim)];
        if (std::norm(apq) < skip_sq) continue;
        const double r = std::abs(apq);
        const complexd phase = apq / r;  // e^{i phi}
        const double app = a[idx(p, p, dim)].real();
        const double aqq = a[idx(q, q, dim)].real();
        const double tau = (aqq - app) / (2.0 * r);
        // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
        double t;
        if (tau >= 0.0)
          t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complexd se_m = s * std::conj(phase);  // s e^{-i phi}
        const complexd se_p = s * phase;             // s e^{+i phi}

        // columns p and q of A and of the accumulated vectors
        for (int k = 0; k < dim; ++k) {
          if (k != p && k != q) {
            const complexd akp = a[idx(k, p, dim)];
            const complexd akq = a[idx(k, q, dim)];
            const complexd np = c * akp + se_m * akq;
            const complexd nq = -se_p * akp + c * akq;
            a[idx(k, p, dim)] = np;
            a[idx(k, q, dim)] = nq;
            a[idx(p, k, dim)] = std::conj(np);
            a[idx(q, k, dim)] = std::conj(nq);
          }
          const complexd vkp = v[idx(k, p, dim)];
          const complexd vkq = v[idx(k, q, dim)];
          v[idx(k, p, dim)] = c * vkp + se_m * vkq;
          v[idx(k, q, dim)] = -se_p * vkp + c * vkq;
        }
        const double dpp = c * c * app + aqq * s * s + 2.0 * r * s * c;
        const double dqq = s * s * app + aqq * c * c - 2.0 * r * s * c;
        a[idx(p, p, dim)] = dpp;
        a[idx(q, q, dim)] = dqq;
        a[idx(p, q, dim)] = 0.0;
        a[idx(q, p, dim)] = 0.0;
      }
    }
  }

  HermitianEigen result;
  result.dim = dim;
  result.values.resize(dim);
  for (int i = 0; i < dim; ++i) result.values[i] = a[idx(i, i, dim)].real();

  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return result.values[x] < result.values[y]; });

  std::vector<double> sorted_values(dim);
  std::vector<complexd> sorted_vectors(static_cast<std::size_t>(dim) * dim);
  for (int k = 0; k < dim; ++k) {
    sorted_values[k] = result.values[order[k]];
    for (int i = 0; i < dim; ++i) sorted_vectors[idx(i, k, dim)] = v[idx(i, order[k], dim)];
  }
  result.values = std::move(sorted_values);
  result.vectors = std::move(sorted_vectors);
  return result;
}

double min_eigenvalue(std::span<const complexd> a, int dim) {
  return eigen_hermitian(a, dim).values.front();
}

std::vector<complexd> matmul(std::span<const complexd> a, std::span<const complexd> b, int dim) {
  std::vector<complexd> c(static_cast<std::size_t>(dim) * dim, complexd{0.0, 0.0});
#pragma omp parallel for schedule(static)
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) {
      const complexd aik = a[idx(i, k, dim)];
      if (aik == complexd{0.0, 0.0}) continue;
      for (int j = 0; j < dim; ++j) c[idx(i, j, dim)] += aik * b[idx(k, j, dim)];
    }
  }
  return c;
}

std::vector<complexd> apply_spectral(const HermitianEigen& es, std::span<const double> f) {
  const int dim = es.dim;
  std::vector<complexd> out(static_cast<std::size_t>(dim) * dim, complexd{0.0, 0.0});
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      complexd s{0.0, 0.0};
      for (int k = 0; k < dim; ++k)
        s += es.vectors[idx(i, k, dim)] * f[k] * std::conj(es.vectors[idx(j, k, dim)]);
      out[idx(i, j, dim)] = s;
    }
  }
  return out;
}

std::vector<complexd> matrix_exponential(std::span<const complexd> a, int dim) {
  double norm1 = 0.0;
  for (int j = 0; j < dim; ++j) {
    double col = 0.0;
    for (int i = 0; i < dim; ++i) col += std::abs(a[idx(i, j, dim)]);
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  double scale = 1.0;
  while (norm1 * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }

  std::vector<complexd> x(a.begin(), a.end());
  for (auto& z : x) z *= scale;

  // exp(x) = sum x^k / k!, terms added until they vanish at double precision
  std::vector<complexd> result(static_cast<std::size_t>(dim) * dim, complexd{0.0, 0.0});
  for (int i = 0; i < dim; ++i) result[idx(i, i, dim)] = 1.0;
  std::vector<complexd> term = result;
  for (int k = 1; k <= 32; ++k) {
    term = matmul(term, x, dim);
    for (auto& z : term) z /= static_cast<double>(k);
    double tmax = 0.0;
    for (const auto& z : term) tmax = std::max(tmax, std::abs(z));
    for (std::size_t i = 0; i < result.size(); ++i) result[i] += term[i];
    if (tmax < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result, dim);
  return result;
}

}  // namespace qamp::linalg
