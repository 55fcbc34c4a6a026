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

#include "doctest.h"
#include "helpers.hpp"
#include "qamp/channels.hpp"
#include "qamp/metrics.hpp"

using namespace qamp;
using qamp::test::make_policy;
using qamp::test::quadrature_phase_variance;

namespace {
constexpr double kPiSqOverThree = 3.2898681336964524;
// frozen reference: direct evaluation of the double sum at dim 64 and 128
// agreed to below 1e-10 when this constant was recorded
constexpr double kCoherentHalfVariance = 1.568471033677164;
}  // namespace

TEST_CASE("device_gain recovers the amplitude of a coherent state") {
  const auto policy = make_policy();
  const auto gain = device_gain(coherent_state(0.5, policy), 0.5, policy);
  CHECK(gain.amplitude_gain == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(gain.overlap_at_max == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_FALSE(gain.at_bracket_edge);
  CHECK(gain.overlap_at_max >= coherent_overlap(coherent_state(0.5, policy), 1e-6));
  CHECK(gain.overlap_at_max >=
        coherent_overlap(coherent_state(0.5, policy), policy.gain_bracket_max * 0.5));
}

TEST_CASE("device_gain flags bracket-edge maxima") {
  const auto policy = make_policy();
  // a diagonal state peaks toward beta -> 0
  CHECK_THROWS_AS(device_gain(thermal_state(1.0, policy), 0.5, policy), OptimizationError);
  CHECK_THROWS_AS(device_gain(coherent_state(0.5, policy), -0.5, policy), DomainError);
}

TEST_CASE("fidelity_to_coherent") {
  const auto policy = make_policy();
  CHECK(fidelity_to_coherent(coherent_state(0.75, policy), 1.5, 0.5) ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(fidelity_to_coherent(thermal_state(1.0, policy), 0.0, 0.5) ==
        doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("phase_variance of diagonal states is pi^2/3") {
  const auto policy = make_policy();
  CHECK(phase_variance(coherent_state(0.0, policy), policy) ==
        doctest::Approx(kPiSqOverThree).epsilon(1e-12));
  for (double nbar : {0.5, 1.0, 3.0})
    CHECK(phase_variance(thermal_state(nbar, policy), policy) ==
          doctest::Approx(kPiSqOverThree).epsilon(1e-12));
}

TEST_CASE("phase_variance regression value for the reference input state") {
  CHECK(phase_variance(coherent_state(0.5, make_policy(64)), make_policy(64)) ==
        doctest::Approx(kCoherentHalfVariance).epsilon(1e-9));
  CHECK(phase_variance(coherent_state(0.5, make_policy(128)), make_policy(128)) ==
        doctest::Approx(kCoherentHalfVariance).epsilon(1e-9));
}

TEST_CASE("phase_variance equals the quadrature of the phase distribution") {
  const auto policy = make_policy();
  for (double alpha : {0.3, 0.5, 1.0}) {
    const auto rho = coherent_state(alpha, policy);
    CHECK(phase_variance(rho, policy) ==
          doctest::Approx(quadrature_phase_variance(rho)).epsilon(1e-7));
  }
  const auto device = subtract_photons(amplify(coherent_state(0.5, policy), {2.0}, policy), {1});
  CHECK(phase_variance(device.state, policy) ==
        doctest::Approx(quadrature_phase_variance(device.state)).epsilon(1e-7));
}

TEST_CASE("phase_variance decreases with coherent amplitude") {
  const auto policy = make_policy();
  double previous = kPiSqOverThree;
  for (double alpha = 0.1; alpha <= 1.501; alpha += 0.1) {
    const double var = phase_variance(coherent_state(alpha, policy), policy);
    CHECK(var < previous);
    CHECK(var > 0.0);
    CHECK(var <= kPiSqOverThree);
    previous = var;
  }
}

TEST_CASE("a deterministic amplifier cannot decrease the phase variance") {
  const auto policy = make_policy();
  for (double alpha : {0.25, 0.5, 1.0}) {
    const double before = phase_variance(coherent_state(alpha, policy), policy);
    for (double G : {1.2, 1.5, 2.0, 3.0}) {
      const double after =
          phase_variance(amplify(coherent_state(alpha, policy), {G}, policy), policy);
      CHECK(after >= before);
    }
  }
}

TEST_CASE("phase_variance rejects complex elements") {
  const auto policy = make_policy();
  auto rho = coherent_state(0.5, policy);
  rho(0, 1) += complexd{0.0, 1e-6};
  rho(1, 0) -= complexd{0.0, 1e-6};
  CHECK_THROWS_AS(phase_variance(rho, policy), DomainError);
}

TEST_CASE("uhlmann_fidelity basics") {
  const auto policy = make_policy();
  const auto th = thermal_state(1.0, policy);
  CHECK(uhlmann_fidelity(th, th, policy) == doctest::Approx(1.0).epsilon(1e-7));

  const auto plus = coherent_state(0.5, policy);
  const auto minus = coherent_state(-0.5, policy);
  CHECK(uhlmann_fidelity(plus, minus, policy) == doctest::Approx(std::exp(-1.0)).epsilon(1e-7));

  CHECK_THROWS_AS(uhlmann_fidelity(th, thermal_state(1.0, make_policy(32)), policy), DomainError);
}

TEST_CASE("uhlmann_fidelity is symmetric and matches Tr(rho sigma) for pure rho") {
  const auto policy = make_policy();
  const auto mixed = displaced_thermal(0.4, 0.8, policy);
  const auto pure = coherent_state(0.6, policy);

  const double f1 = uhlmann_fidelity(pure, mixed, policy);
  const double f2 = uhlmann_fidelity(mixed, pure, policy);
  CHECK(std::abs(f1 - f2) < 1e-7);
  CHECK(f1 >= 0.0);
  CHECK(f1 <= 1.0);

  // Tr(rho sigma) with rho pure
  complexd trace{0.0, 0.0};
  for (int n = 0; n < policy.dim; ++n)
    for (int m = 0; m < policy.dim; ++m) trace += pure(n, m) * mixed(m, n);
  CHECK(f1 == doctest::Approx(trace.real()).epsilon(1e-7));
}

TEST_CASE("uhlmann_fidelity cross-checks coherent_overlap on pure pairs") {
  const auto policy = make_policy();
  for (double a : {0.2, 0.5})
    for (double b : {-0.4, 0.3, 0.9}) {
      const double f = uhlmann_fidelity(coherent_state(a, policy), coherent_state(b, policy), policy);
      CHECK(f == doctest::Approx(std::exp(-(a - b) * (a - b))).epsilon(1e-6));
      CHECK(f == doctest::Approx(coherent_overlap(coherent_state(a, policy), b)).epsilon(1e-6));
    }
}

TEST_CASE("uhlmann_fidelity rejects strongly unphysical input") {
  const auto policy = make_policy(16);
  auto bad = thermal_state(0.5, policy);
  bad(3, 3) = -0.2;  // large negative eigenvalue mass
  CHECK_THROWS_AS(uhlmann_fidelity(bad, thermal_state(0.5, policy), policy), NumericsError);
}
