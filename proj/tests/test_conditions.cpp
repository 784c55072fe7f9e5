/*
 * Copyright 2026 The hcvoronoi Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include "hcv/conditions.hpp"
#include "hcv/constructions.hpp"
#include "hcv/game.hpp"
#include "support.hpp"

using namespace hcv;
using hcv::testing::code_of;
using hcv::testing::Rng;

namespace {

/// True when no vertex at distance k from m earns more than 1/2 against m.
bool layer_clear(const Distribution& dist, Vertex m, int k) {
  for (std::uint32_t x = 0; x < dist.size(); ++x) {
    if (hamming(Vertex{x}, m) != k) continue;
    if (hcv::testing::oracle_payoff(dist, Vertex{x}, m) > Rational(1, 2)) return false;
  }
  return true;
}

Rational random_beta(Rng& rng) {
  std::uniform_int_distribution<int> pick(50, 99);
  return make_rational(pick(rng), 100);
}

}  // namespace

TEST_CASE("thresholds") {
  CHECK(global_threshold(1) == Rational(1, 2));
  CHECK(global_threshold(2) == Rational(1, 2));
  CHECK(global_threshold(3) == Rational(2, 3));
  CHECK(global_threshold(4) == Rational(2, 3));
  CHECK(global_threshold(5) == make_rational(7, 10));
  CHECK(global_threshold(6) == make_rational(7, 10));
  CHECK(local_threshold(1) == Rational(1, 2));
  CHECK(local_threshold(2) == make_rational(5, 8));
  CHECK(local_threshold(3) == Rational(2, 3));
  CHECK(code_of([] { local_threshold(0); }) == ErrorCode::BadRadius);
  CHECK(code_of([] { global_threshold(0); }) == ErrorCode::InvalidDimension);
}

TEST_CASE("single-coordinate layer bound has the marginal closed forms") {
  for (int k = 1; k <= 64; ++k) {
    CAPTURE(k);
    const Rational expected = k % 2 ? Rational(3, 4) - make_rational(1, 4L * k) : Rational(3, 4) - make_rational(1, 2L * k);
    CHECK(layer_exclusion_bound(1, 0, k) == expected);
  }
  for (int d = 1; d <= 64; ++d) {
    Rational best = 0;
    for (int k = 1; k <= d; ++k) best = std::max(best, layer_exclusion_bound(1, 0, k));
    CHECK(global_threshold(d) == best);
  }
}

TEST_CASE("layer bound against a direct count") {
  // Count pairs (I, coalition outcome) over the k differing coordinates directly.
  for (int k = 1; k <= 9; ++k) {
    for (int t = 1; t <= k; ++t) {
      for (int m = 0; 2 * m <= t; ++m) {
        const int lower = (k - 1) / 2;
        Integer good = 0;
        Integer total = 0;
        // The k differing coordinates: `lower` agree with M under X, the rest are blue.
        for (auto mask : subsets_of_size(k, t)) {
          const int blue = std::popcount(mask >> lower);
          ++total;
          if (blue <= m) ++good;
        }
        CHECK(total == binomial(k, t));
        CHECK(layer_exclusion_bound(t, m, k) == (1 + ratio(good, total)) / 2);
      }
    }
  }
  CHECK(layer_exclusion_bound(2, 1, 3) == make_rational(5, 6));
  CHECK(code_of([] { layer_exclusion_bound(0, 0, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { layer_exclusion_bound(3, 2, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { layer_exclusion_bound(4, 0, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { layer_exclusion_bound(2, -1, 3); }) == ErrorCode::BadParameters);
}

TEST_CASE("global condition is sound") {
  Rng rng(41);
  for (int d = 2; d <= 6; ++d) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = hcv::testing::random_vertex(d, rng);
      const auto dist = hcv::testing::mixture_at_threshold(d, global_threshold(d), m, rng);
      const auto verdict = check_global_sufficient(dist);
      REQUIRE(verdict.holds);
      CHECK(verdict.majority_point == m);
      CHECK(hcv::testing::oracle_is_equilibrium(dist, m, m));
    }
  }
}

TEST_CASE("local condition is sound") {
  Rng rng(42);
  for (int k = 1; k <= 3; ++k) {
    for (int d = std::max(k, 2); d <= 6; ++d) {
      for (int trial = 0; trial < 15; ++trial) {
        const auto m = hcv::testing::random_vertex(d, rng);
        const auto dist = hcv::testing::mixture_at_threshold(d, local_threshold(k), m, rng);
        REQUIRE(check_local_sufficient(dist, k).holds);
        CHECK(hcv::testing::oracle_is_k_local(dist, m, m, k));
      }
    }
  }
  CHECK(code_of([] { check_local_sufficient(intro_example(), 4); }) == ErrorCode::BadRadius);
  CHECK(code_of([] { check_local_sufficient(intro_example(), 0); }) == ErrorCode::BadRadius);
}

TEST_CASE("verdict slack") {
  const auto v = check_global_sufficient(intro_example());
  CHECK_FALSE(v.holds);
  CHECK(v.threshold == Rational(2, 3));
  CHECK(v.per_coordinate_slack == std::vector<Rational>(3, make_rational(3, 5) - Rational(2, 3)));
  CHECK(code_of([] { check_global_sufficient(uniform(3)); }) == ErrorCode::BalancedCoordinate);
}

TEST_CASE("excluded layers are sound") {
  Rng rng(43);
  int reported = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 6;
    const auto m = hcv::testing::random_vertex(d, rng);
    const auto dist = hcv::testing::mixture_at_threshold(d, random_beta(rng), m, rng);
    for (int t = 1; t <= std::min(d, 3); ++t) {
      for (int mm = 0; 2 * mm <= t; ++mm) {
        for (int k : excluded_layers(dist, t, mm)) {
          CHECK(k >= t);
          CHECK(k <= d);
          CHECK(layer_clear(dist, m, k));
          ++reported;
        }
      }
    }
  }
  CHECK(reported > 100);
  CHECK(code_of([] { excluded_layers(intro_example(), 4, 0); }) == ErrorCode::BadParameters);
}

TEST_CASE("certificates agree with brute force") {
  Rng rng(44);
  const ExclusionRule rules[] = {{1, 0}, {2, 1}, {3, 1}};
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 6;
    const auto m = hcv::testing::random_vertex(d, rng);
    const auto dist = hcv::testing::mixture_at_threshold(d, random_beta(rng) * Rational(3, 4), m, rng);
    const auto cert = certify_equilibrium(dist, std::span(rules, static_cast<std::size_t>(std::min(d, 3))));
    CHECK(cert.majority_point == m);
    CHECK(cert.certified() == hcv::testing::oracle_is_equilibrium(dist, m, m));
    if (cert.certified()) {
      CHECK(cert.excluded_layers.size() == static_cast<std::size_t>(d));
    } else {
      CHECK_FALSE(layer_clear(dist, m, *cert.first_failing_layer));
      for (int k = 1; k < *cert.first_failing_layer; ++k) CHECK(layer_clear(dist, m, k));
    }
  }
}

TEST_CASE("coalition example needs the pair rule") {
  const auto dist = coalition_example();
  CHECK_FALSE(check_global_sufficient(dist).holds);
  CHECK(excluded_layers(dist, 1, 0) == std::vector<int>{1, 2});
  CHECK(excluded_layers(dist, 2, 1) == std::vector<int>{2, 3});
  const ExclusionRule rules[] = {{2, 1}};
  const auto cert = certify_equilibrium(dist, rules);
  CHECK(cert.certified());
  CHECK(cert.excluded_layers.at(3).kind == LayerJustification::Kind::Rule);
}

TEST_CASE("sharpness constructions sit just below the threshold") {
  for (int d : {3, 5, 7}) {
    for (const auto& eps : {make_rational(1, 100), make_rational(1, 10)}) {
      const auto dist = no_equilibrium_odd(d, eps);
      const auto v = check_global_sufficient(dist);
      CHECK_FALSE(v.holds);
      for (const auto& s : v.per_coordinate_slack) CHECK(s == -eps * (Rational(1, 2) + make_rational(1, 2L * d)));
      CHECK(find_equilibria(dist).empty());
    }
  }
}

TEST_CASE("certificates agree with the equilibrium check on the catalog") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.label());
    const auto& dist = entry.distribution;
    const auto report = majority_report(dist);
    if (!report.majority_point) {
      CHECK(code_of([&] { certify_equilibrium(dist, {}); }) == ErrorCode::BalancedCoordinate);
      continue;
    }
    const ExclusionRule rules[] = {{1, 0}, {2, 1}};
    const auto m = *report.majority_point;
    CHECK(certify_equilibrium(dist, rules).certified() == is_equilibrium(dist, m, m));
  }
}
