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
#include "qamp/oracle.hpp"

using namespace qamp;
using qamp::test::fock_projector;
using qamp::test::make_policy;

TEST_CASE("displacement_exponential_state trivial limits") {
  const auto policy = make_policy();
  CHECK(max_elementwise_diff(oracle::displacement_exponential_state(0.0, 1.0, policy),
                             thermal_state(1.0, policy)) < 1e-12);
  CHECK(max_elementwise_diff(oracle::displacement_exponential_state(0.5, 0.0, policy),
                             coherent_state(0.5, policy)) < 1e-7);
}

TEST_CASE("displacement_exponential_state matches the amplifier map") {
  const auto policy = make_policy();
  const auto amp = amplify(coherent_state(0.5, policy), {2.0}, policy);
  const auto slow =
      oracle::displacement_exponential_state(0.5 * std::sqrt(2.0), 1.0, policy);
  CHECK(max_elementwise_diff(amp, slow) < 1e-7);
}

TEST_CASE("lowering_sandwich basics") {
  const auto policy = make_policy();
  const auto coh = coherent_state(0.5, policy);
  const auto fixed = oracle::lowering_sandwich(coh, 1);
  CHECK(max_elementwise_diff(fixed.state, coh) < 1e-8);

  const auto two = oracle::lowering_sandwich(fock_projector(2, 16), 2);
  CHECK(two.state(0, 0).real() == doctest::Approx(1.0));
  CHECK(two.success_weight == doctest::Approx(2.0));  // Tr(a^2 |2><2| a^dag2) = 2

  const auto th = oracle::lowering_sandwich(thermal_state(1.0, policy), 1);
  CHECK(mean_photon_number(th.state) == doctest::Approx(2.0).epsilon(1e-6));

  CHECK_THROWS_AS(oracle::lowering_sandwich(coherent_state(0.0, policy), 1), ZeroNormError);
}

TEST_CASE("oracle and fast path agree over the cross-product grid") {
  const auto policy = make_policy();
  for (double alpha : {0.25, 0.5, 1.0})
    for (double G : {1.0, 1.5, 2.0, 3.0}) {
      const auto amp = amplify(coherent_state(alpha, policy), {G}, policy);
      if (G > 1.0) {
        const auto slow =
            oracle::displacement_exponential_state(std::sqrt(G) * alpha, G - 1.0, policy);
        CHECK(max_elementwise_diff(amp, slow) < 1e-7);
      }
      for (int m : {0, 1, 2}) {
        const auto fast = subtract_photons(amp, {m});
        const auto sandwich = oracle::lowering_sandwich(amp, m);
        CHECK(max_elementwise_diff(fast.state, sandwich.state) < 1e-12);
        CHECK(fast.success_weight == doctest::Approx(sandwich.success_weight).epsilon(1e-10));
      }
    }
}

TEST_CASE("brute_force_overlap_max") {
  const auto policy = make_policy();

  const auto coh = oracle::brute_force_overlap_max(coherent_state(0.5, policy), 0.5, 4096, policy);
  CHECK(coh.amplitude_gain == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_FALSE(coh.at_bracket_edge);

  // agreement with the golden-section search on a device output
  const auto device = subtract_photons(amplify(coherent_state(0.5, policy), {2.0}, policy), {1});
  const auto golden = device_gain(device.state, 0.5, policy);
  const auto scanned = oracle::brute_force_overlap_max(device.state, 0.5, 8192, policy);
  CHECK(std::abs(golden.beta_star - scanned.beta_star) <= 2.0 * policy.optimizer_tol);

  // diagonal states put the maximum at the lower bracket edge
  const auto edge = oracle::brute_force_overlap_max(thermal_state(1.0, policy), 0.5, 2048, policy);
  CHECK(edge.at_bracket_edge);
  CHECK(edge.beta_star < 0.01);

  CHECK_THROWS_AS(oracle::brute_force_overlap_max(coherent_state(0.5, policy), 0.5, 100, policy),
                  DomainError);
}
