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

#pragma once

// Alternating best-response dynamics.

#include <cstddef>
#include <variant>
#include <vector>

#include "hcv/core.hpp"

namespace hcv {

enum class Player { One, Two };

inline Player other(Player p) { return p == Player::One ? Player::Two : Player::One; }

struct GameState {
  Vertex pos1;
  Vertex pos2;
  Player mover = Player::One;

  friend bool operator==(const GameState&, const GameState&) = default;
};

/// GlobalBest moves to a payoff maximizer, staying put if already one.
/// NearestImproving moves to a strictly improving vertex at minimum Hamming
/// distance. Both break ties by the smallest vertex index.
enum class MoveRule { GlobalBest, NearestImproving };

struct ReachedEquilibrium {
  friend bool operator==(const ReachedEquilibrium&, const ReachedEquilibrium&) = default;
};
/// states[entry_index] recurred `period` steps later.
struct Cycle {
  std::size_t entry_index = 0;
  std::size_t period = 0;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};
struct Truncated {
  std::size_t max_steps = 0;
  friend bool operator==(const Truncated&, const Truncated&) = default;
};

using Outcome = std::variant<ReachedEquilibrium, Cycle, Truncated>;

struct Trajectory {
  std::vector<GameState> states;
  Outcome outcome;
};

/// Payoff to the player about to move in `state`.
Rational mover_payoff(const Distribution& dist, const GameState& state);

/// One move by state.mover; the mover then alternates.
GameState step(const Distribution& dist, const GameState& state, MoveRule rule);

/// Iterates step until both players stay on consecutive turns
/// (ReachedEquilibrium), a (pos1, pos2, mover) state recurs (Cycle), or
/// max_steps moves were made (Truncated). Throws BadStepLimit for max_steps < 1.
Trajectory run(const Distribution& dist, GameState initial, MoveRule rule, std::size_t max_steps);

}  // namespace hcv
