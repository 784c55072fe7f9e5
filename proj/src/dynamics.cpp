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

#include "hcv/dynamics.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hcv/error.hpp"
#include "hcv/game.hpp"
#include "score.hpp"

namespace hcv {

namespace {

Vertex& mover_position(GameState& s) { return s.mover == Player::One ? s.pos1 : s.pos2; }
Vertex mover_position(const GameState& s) { return s.mover == Player::One ? s.pos1 : s.pos2; }
Vertex opponent_position(const GameState& s) { return s.mover == Player::One ? s.pos2 : s.pos1; }

Vertex nearest_improving(const Distribution& dist, Vertex current, Vertex opponent) {
  return detail::with_scorer(dist, [&](auto score) {
    const auto base = score(current, opponent);
    for (int radius = 1; radius <= dist.dimension(); ++radius) {
      // Ascending index scan, so the first hit is the smallest at this radius.
      for (std::uint32_t x = 0; x < dist.size(); ++x) {
        if (hamming(Vertex{x}, current) != radius) continue;
        if (score(Vertex{x}, opponent) > base) return Vertex{x};
      }
    }
    return current;
  });
}

}  // namespace

Rational mover_payoff(const Distribution& dist, const GameState& state) {
  return payoff(dist, mover_position(state), opponent_position(state));
}

GameState step(const Distribution& dist, const GameState& state, MoveRule rule) {
  GameState next = state;
  const Vertex current = mover_position(state);
  const Vertex opponent = opponent_position(state);
  if (rule == MoveRule::GlobalBest) {
    const auto best = best_responses(dist, opponent);
    if (!std::binary_search(best.argmax.begin(), best.argmax.end(), current)) {
      mover_position(next) = best.argmax.front();
    }
  } else {
    mover_position(next) = nearest_improving(dist, current, opponent);
  }
  next.mover = other(state.mover);
  return next;
}

Trajectory run(const Distribution& dist, GameState initial, MoveRule rule, std::size_t max_steps) {
  if (max_steps < 1) throw Error(ErrorCode::BadStepLimit, "max_steps must be at least 1");
  using Key = std::tuple<std::uint32_t, std::uint32_t, Player>;
  auto key = [](const GameState& s) { return Key{s.pos1.bits, s.pos2.bits, s.mover}; };

  Trajectory t;
  t.states.push_back(initial);
  std::map<Key, std::size_t> seen{{key(initial), 0}};
  bool previous_stayed = false;
  for (std::size_t i = 1; i <= max_steps; ++i) {
    const GameState& cur = t.states.back();
    GameState next = step(dist, cur, rule);
    const bool stayed = next.pos1 == cur.pos1 && next.pos2 == cur.pos2;
    t.states.push_back(next);
    if (stayed && previous_stayed) {
      t.outcome = ReachedEquilibrium{};
      return t;
    }
    if (auto it = seen.find(key(next)); it != seen.end()) {
      t.outcome = Cycle{it->second, i - it->second};
      return t;
    }
    seen.emplace(key(next), i);
    previous_stayed = stayed;
  }
  t.outcome = Truncated{max_steps};
  return t;
}

}  // namespace hcv
