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

#include <algorithm>
#include <numeric>

#include "hcv/constructions.hpp"
#include "hcv/game.hpp"
#include "support.hpp"

using namespace hcv;
using hcv::testing::code_of;
using hcv::testing::oracle_payoff;
using hcv::testing::Rng;

namespace {

Vertex v(std::string_view bits) { return parse_vertex(bits, static_cast<int>(bits.size())); }

/// A random distribution with no balanced coordinate, relabelled so its
/// majority point is `m`.
Distribution random_with_majority(int d, Vertex m, Rng& rng) {
  for (;;) {
    const auto dist = hcv::testing::random_distribution(d, rng);
    const auto r = majority_report(dist);
    if (!r.majority_point) continue;
    return flip(dist, Vertex{r.majority_point->bits ^ m.bits});
  }
}

}  // namespace

TEST_CASE("payoffs match brute force on every pair") {
  Rng rng(31);
  for (int d = 1; d <= 5; ++d) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto dist = hcv::testing::random_distribution(d, rng);
      for (std::uint32_t a = 0; a < dist.size(); ++a) {
        for (std::uint32_t b = 0; b < dist.size(); ++b) {
          const auto m = voronoi_measures(dist, Vertex{a}, Vertex{b});
          CHECK(m.p1() == oracle_payoff(dist, Vertex{a}, Vertex{b}));
          CHECK(payoff(dist, Vertex{a}, Vertex{b}) == m.p1());
          CHECK(m.p2() == oracle_payoff(dist, Vertex{b}, Vertex{a}));
          CHECK(m.v_ab + m.tie + m.v_ba == 1);
          CHECK(m.v_ab >= 0);
          CHECK(m.tie >= 0);
          CHECK(m.v_ba >= 0);
          CHECK(payoff(dist, Vertex{a}, Vertex{b}) + payoff(dist, Vertex{b}, Vertex{a}) == 1);
        }
      }
    }
  }
}

TEST_CASE("same position ties everything") {
  const auto dist = intro_example();
  const auto m = voronoi_measures(dist, v("101"), v("101"));
  CHECK(m.tie == 1);
  CHECK(m.p1() == Rational(1, 2));
}

TEST_CASE("payoff is invariant under hypercube automorphisms") {
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 5;
    const auto dist = hcv::testing::random_distribution(d, rng);
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Automorphism map{perm, hcv::testing::random_vertex(d, rng)};
    const auto moved = transform(dist, map);
    for (int pair = 0; pair < 10; ++pair) {
      const auto a = hcv::testing::random_vertex(d, rng);
      const auto b = hcv::testing::random_vertex(d, rng);
      CHECK(payoff(moved, map.apply(a), map.apply(b)) == payoff(dist, a, b));
    }
  }
}

TEST_CASE("best responses match brute force") {
  Rng rng(33);
  for (int d = 1; d <= 6; ++d) {
    const auto dist = hcv::testing::random_distribution(d, rng);
    for (int trial = 0; trial < 4; ++trial) {
      const auto b = hcv::testing::random_vertex(d, rng);
      const auto best = best_responses(dist, b);
      CHECK(best.value == hcv::testing::oracle_best_value(dist, b));
      std::vector<Vertex> expected;
      for (std::uint32_t y = 0; y < dist.size(); ++y) {
        if (oracle_payoff(dist, Vertex{y}, b) == best.value) expected.push_back(Vertex{y});
      }
      CHECK(best.argmax == expected);
    }
  }
}

TEST_CASE("k-local equilibria") {
  const auto dist = intro_example();
  CHECK(is_k_local_equilibrium(dist, v("000"), v("000"), 0));
  CHECK(is_k_local_equilibrium(dist, v("000"), v("000"), 2));
  CHECK_FALSE(is_k_local_equilibrium(dist, v("000"), v("000"), 3));
  CHECK(code_of([&] { is_k_local_equilibrium(dist, v("000"), v("000"), 4); }) == ErrorCode::BadRadius);
  CHECK(code_of([&] { is_k_local_equilibrium(dist, v("000"), v("000"), -1); }) == ErrorCode::BadRadius);

  Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 4;
    const auto dist2 = hcv::testing::random_distribution(d, rng);
    const auto a = hcv::testing::random_vertex(d, rng);
    const auto b = trial % 2 ? a : hcv::testing::random_vertex(d, rng);
    bool failed = false;
    for (int k = 0; k <= d; ++k) {
      const bool local = is_k_local_equilibrium(dist2, a, b, k);
      CHECK(local == hcv::testing::oracle_is_k_local(dist2, a, b, k));
      if (failed) CHECK_FALSE(local);
      failed = failed || !local;
    }
    CHECK(is_k_local_equilibrium(dist2, a, b, d) == is_equilibrium(dist2, a, b));
    CHECK(is_equilibrium(dist2, a, b) == hcv::testing::oracle_is_equilibrium(dist2, a, b));
  }
}

TEST_CASE("with a majority point the equilibrium set is empty or {(M, M)}") {
  Rng rng(35);
  for (int d = 2; d <= 7; ++d) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto planted = hcv::testing::random_vertex(d, rng);
      // Alternate between generic tables and ones pushed towards a planted point.
      const auto dist = trial % 2 ? random_with_majority(d, planted, rng)
                                  : hcv::testing::mixture_at_threshold(d, make_rational(trial % 7, 10), planted, rng);
      const auto report = majority_report(dist);
      if (!report.majority_point) continue;
      const Vertex m = *report.majority_point;
      const auto eq = find_equilibria(dist);
      CHECK((eq.empty() || (eq.size() == 1 && eq.contains(m, m))));
      CHECK(eq.empty() != is_equilibrium(dist, m, m));
      if (d <= 4 || trial < 5) CHECK(eq == find_equilibria_exhaustive(dist));
    }
  }
}

TEST_CASE("balanced equilibria lie in the majority subcube") {
  Rng rng(36);
  for (int d = 2; d <= 6; ++d) {
    for (int trial = 0; trial < 30; ++trial) {
      std::uniform_int_distribution<std::uint32_t> pick(1, full_mask(d));
      const auto dist = hcv::testing::random_balanced(d, pick(rng), rng);
      const auto report = majority_report(dist);
      const std::uint32_t fixed = full_mask(d) & ~report.free_coords.mask();
      const auto eq = find_equilibria(dist);
      for (const auto& [a, b] : eq.pairs) {
        CHECK((a.bits & fixed) == (report.subcube_base().bits & fixed));
        CHECK((b.bits & fixed) == (report.subcube_base().bits & fixed));
      }
      if (d <= 5) CHECK(eq == find_equilibria_exhaustive(dist));
    }
  }
}

TEST_CASE("monotone distributions have an equilibrium at the dominant corner") {
  Rng rng(37);
  for (int d = 1; d <= 6; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto dec = hcv::testing::random_decreasing(d, rng);
      CHECK(is_equilibrium(dec, Vertex{0}, Vertex{0}));
      const auto inc = flip(dec, Vertex{full_mask(d)});
      CHECK(is_monotone(inc, Monotonicity::Increasing));
      CHECK(is_equilibrium(inc, Vertex{full_mask(d)}, Vertex{full_mask(d)}));
    }
  }
}

TEST_CASE("restriction") {
  const auto dist = intro_example();
  const auto r = restrict(dist, v("100"), v("111"));
  CHECK(r.dimension() == 2);
  // Coordinates 2 and 3 differ; bit j is 1 when the vertex agrees with 111 there.
  CHECK(r.weight(v("00")) == make_rational(2, 5));
  CHECK(r.weight(v("11")) == make_rational(1, 5));
  CHECK(r.weight(v("01")) == make_rational(1, 5));
  CHECK(r.weight(v("10")) == make_rational(1, 5));
  CHECK(code_of([&] { restrict(dist, v("010"), v("010")); }) == ErrorCode::EqualPoints);

  Rng rng(38);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + trial % 8;
    const auto dist2 = hcv::testing::random_distribution(d, rng);
    const auto a = hcv::testing::random_vertex(d, rng);
    const auto b = hcv::testing::random_vertex(d, rng);
    if (a == b) continue;
    CHECK(payoff_via_restriction(dist2, a, b) == payoff(dist2, a, b));
    CHECK(restrict(dist2, a, b).dimension() == hamming(a, b));
  }
}

TEST_CASE("balanced pair scans are gated") {
  Limits small;
  small.max_pair_scan_dimension = 3;
  CHECK(code_of([&] { find_equilibria(uniform(4), small); }) == ErrorCode::ComputationGated);
  CHECK(code_of([&] { find_equilibria_exhaustive(uniform(4), small); }) == ErrorCode::ComputationGated);
  // With a majority point no scan is needed.
  CHECK(find_equilibria(point_mass(4, Vertex{3}), small).contains(Vertex{3}, Vertex{3}));
}

TEST_CASE("big-integer tables give the same payoffs") {
  const long primes[] = {1000003, 1000033, 1000037, 1000039};
  std::vector<std::pair<Vertex, Rational>> entries;
  Rational rest = 1;
  for (std::uint32_t i = 0; i < 4; ++i) {
    entries.emplace_back(Vertex{i * 2 + 1}, make_rational(1, primes[i]));
    rest -= entries.back().second;
  }
  entries.emplace_back(Vertex{0}, rest);
  const auto dist = make_distribution(3, entries, false);
  REQUIRE_FALSE(dist.fixed_width());
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) CHECK(payoff(dist, Vertex{a}, Vertex{b}) == oracle_payoff(dist, Vertex{a}, Vertex{b}));
  }
  CHECK(find_equilibria(dist) == find_equilibria_exhaustive(dist));
}
