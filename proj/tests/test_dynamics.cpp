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

#include "hcv/constructions.hpp"
#include "hcv/dynamics.hpp"
#include "hcv/game.hpp"
#include "support.hpp"

using namespace hcv;
using hcv::testing::code_of;
using hcv::testing::Rng;

namespace {

Vertex v(std::string_view bits) { return parse_vertex(bits, static_cast<int>(bits.size())); }

Vertex mover_at(const GameState& s) { return s.mover == Player::One ? s.pos1 : s.pos2; }

void check_improving(const Distribution& dist, const Trajectory& t) {
  for (std::size_t i = 1; i < t.states.size(); ++i) {
    const auto& before = t.states[i - 1];
    const auto& after = t.states[i];
    CHECK(after.mover == other(before.mover));
    const Vertex opp = before.mover == Player::One ? before.pos2 : before.pos1;
    const Vertex opp_after = before.mover == Player::One ? after.pos2 : after.pos1;
    CHECK(opp == opp_after);
    const Vertex from = mover_at(before);
    const Vertex to = before.mover == Player::One ? after.pos1 : after.pos2;
    if (from != to) CHECK(payoff(dist, to, opp) > payoff(dist, from, opp));
  }
}

}  // namespace

TEST_CASE("intro example cycles under global best response") {
  const auto dist = intro_example();
  const auto t = run(dist, {v("000"), v("111"), Player::One}, MoveRule::GlobalBest, 10000);
  REQUIRE(std::holds_alternative<Cycle>(t.outcome));
  CHECK(std::get<Cycle>(t.outcome) == Cycle{0, 6});
  const std::vector<std::pair<const char*, const char*>> expected = {
      {"000", "111"}, {"100", "111"}, {"100", "000"}, {"111", "000"},
      {"111", "100"}, {"000", "100"}, {"000", "111"}};
  REQUIRE(t.states.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(t.states[i].pos1 == v(expected[i].first));
    CHECK(t.states[i].pos2 == v(expected[i].second));
  }
  check_improving(dist, t);

  const auto from_majority = run(dist, {v("000"), v("000"), Player::One}, MoveRule::GlobalBest, 10000);
  CHECK(std::holds_alternative<Cycle>(from_majority.outcome));
}

TEST_CASE("equilibria are fixed points") {
  for (const auto& entry : catalog()) {
    const auto eq = find_equilibria(entry.distribution);
    if (eq.empty()) continue;
    CAPTURE(entry.label());
    for (MoveRule rule : {MoveRule::GlobalBest, MoveRule::NearestImproving}) {
      const auto [a, b] = eq.pairs.front();
      const auto t = run(entry.distribution, {a, b, Player::One}, rule, 100);
      CHECK(std::holds_alternative<ReachedEquilibrium>(t.outcome));
      CHECK(t.states.size() == 3);
    }
  }
}

TEST_CASE("nearest improving moves to the closest better point") {
  const auto dist = intro_example();
  // Against 000, the first improving point by distance then index is at distance 3.
  const auto next = step(dist, {v("000"), v("000"), Player::Two}, MoveRule::NearestImproving);
  CHECK(next.pos2 == v("111"));
  CHECK(next.mover == Player::One);
  const auto stay = step(point_mass(3, Vertex{0}), {v("000"), v("000"), Player::One}, MoveRule::NearestImproving);
  CHECK(stay.pos1 == v("000"));
}

TEST_CASE("random trajectories improve, terminate and reproduce") {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 4;
    const auto dist = hcv::testing::random_distribution(d, rng);
    const GameState start{hcv::testing::random_vertex(d, rng), hcv::testing::random_vertex(d, rng),
                          trial % 3 ? Player::One : Player::Two};
    for (MoveRule rule : {MoveRule::GlobalBest, MoveRule::NearestImproving}) {
      const std::size_t bound = 2 * (std::size_t{1} << (2 * d)) * 2 + 2;
      const auto t = run(dist, start, rule, bound);
      CHECK_FALSE(std::holds_alternative<Truncated>(t.outcome));
      check_improving(dist, t);
      if (std::holds_alternative<ReachedEquilibrium>(t.outcome)) {
        const auto& last = t.states.back();
        CHECK(is_equilibrium(dist, last.pos1, last.pos2));
      }
      if (const auto* c = std::get_if<Cycle>(&t.outcome)) {
        CHECK(c->period >= 1);
        CHECK(t.states[c->entry_index] == t.states.back());
      }
      const auto again = run(dist, start, rule, bound);
      CHECK(again.states == t.states);
      CHECK(again.outcome == t.outcome);
    }
  }
}

TEST_CASE("step limits") {
  const auto dist = intro_example();
  const auto t = run(dist, {v("000"), v("111"), Player::One}, MoveRule::GlobalBest, 3);
  CHECK(std::get<Truncated>(t.outcome).max_steps == 3);
  CHECK(t.states.size() == 4);
  CHECK(code_of([&] { run(dist, {v("000"), v("111"), Player::One}, MoveRule::GlobalBest, 0); }) ==
        ErrorCode::BadStepLimit);
  CHECK(mover_payoff(dist, {v("000"), v("111"), Player::Two}) == make_rational(3, 5));
}
