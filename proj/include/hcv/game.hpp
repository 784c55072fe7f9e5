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

// The two-player Voronoi game on a weighted hypercube: payoffs, best
// responses, equilibria and subcube restriction.

#include <utility>
#include <vector>

#include "hcv/core.hpp"

namespace hcv {

/// mu(V(A,B)), mu(T(A,B)), mu(V(B,A)); sums to exactly 1.
struct PayoffBreakdown {
  Rational v_ab;
  Rational tie;
  Rational v_ba;

  /// Payoff to the player at A.
  Rational p1() const { return v_ab + tie / 2; }
  /// Payoff to the player at B.
  Rational p2() const { return v_ba + tie / 2; }
};

PayoffBreakdown voronoi_measures(const Distribution& dist, Vertex a, Vertex b);

/// P1(A, B): vote share of a candidate at A against one at B. Ties split evenly.
Rational payoff(const Distribution& dist, Vertex a, Vertex b);

struct BestResponseResult {
  Rational value;
  std::vector<Vertex> argmax;  ///< ascending; every maximizer, no tie-breaking
};

BestResponseResult best_responses(const Distribution& dist, Vertex opponent);

/// True iff neither player can strictly improve.
bool is_equilibrium(const Distribution& dist, Vertex a, Vertex b);

/// Same, restricted to moves of Hamming length at most k. Throws BadRadius.
bool is_k_local_equilibrium(const Distribution& dist, Vertex a, Vertex b, int k);

using VertexPair = std::pair<Vertex, Vertex>;

struct EquilibriumSet {
  std::vector<VertexPair> pairs;  ///< ordered (player 1, player 2), sorted

  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }
  bool contains(Vertex a, Vertex b) const;

  friend bool operator==(const EquilibriumSet&, const EquilibriumSet&) = default;
};

/// Exact equilibrium set.
///
/// With a majority point M the only candidate is (M, M). Otherwise the
/// candidates are pairs inside the majority subcube, each re-verified against
/// all 2^d deviations; this path is gated to Limits::max_pair_scan_dimension
/// (ComputationGated).
EquilibriumSet find_equilibria(const Distribution& dist, const Limits& limits = default_limits());

/// All 4^d pairs against a full payoff table. Reference for find_equilibria;
/// gated like its balanced path.
EquilibriumSet find_equilibria_exhaustive(const Distribution& dist, const Limits& limits = default_limits());

/// The marginal on the coordinates where A and B differ (ascending), oriented
/// so that bit j is 1 when the vertex agrees with B there: A maps to 0...0 and
/// B to 1...1. Throws EqualPoints.
Distribution restrict(const Distribution& dist, Vertex a, Vertex b);

/// P1(A, B) computed from restrict(dist, A, B) alone, as one minus the weight
/// of the top half of its layers (middle layer counted half).
Rational payoff_via_restriction(const Distribution& dist, Vertex a, Vertex b);

}  // namespace hcv
