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

// Sufficient conditions for (M, M) to be a (local) equilibrium, where M is
// the majority point. Every checker works on the zero-majority relabelling
// of its input, so results are stated for M whatever M is; a balanced
// coordinate (w_i^0 = 1/2) raises BalancedCoordinate.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hcv/core.hpp"

namespace hcv {

struct ConditionVerdict {
  bool holds = false;
  Rational threshold;
  /// Majority-side marginal minus threshold, per coordinate.
  std::vector<Rational> per_coordinate_slack;
  Vertex majority_point;
};

/// Marginal threshold guaranteeing an equilibrium in dimension d:
/// 3/4 - 1/(4d) for odd d, 3/4 - 1/(4(d-1)) for even d, 1/2 for d = 1.
Rational global_threshold(int d);

/// Holds when every majority marginal reaches global_threshold(d).
ConditionVerdict check_global_sufficient(const Distribution& dist);

/// 3/4 - 1/(4k). Throws BadRadius for k < 1.
Rational local_threshold(int k);

/// Holds when every majority marginal reaches local_threshold(k); then
/// (M, M) is a k-local equilibrium. Throws BadRadius unless 1 <= k <= d.
ConditionVerdict check_local_sufficient(const Distribution& dist, int k);

/// Coalition threshold above which no vertex at distance k from M beats M,
/// for coalitions of t coordinates allowing m dissents:
///
///   1/2 (1 + sum_{i=0..m} C(floor((k-1)/2), t-i) C(ceil((k+1)/2), i) / C(k, t))
///
/// Requires 1 <= t <= k and 0 <= 2m <= t (BadParameters otherwise).
Rational layer_exclusion_bound(int t, int m, int k);

/// Layers k in [t, d] ruled out by the (t, m) coalition bound: every
/// t-subset I has w_I^m >= layer_exclusion_bound(t, m, k).
std::vector<int> excluded_layers(const Distribution& dist, int t, int m);

struct ExclusionRule {
  int t = 1;
  int m = 0;

  friend bool operator==(const ExclusionRule&, const ExclusionRule&) = default;
};

struct LayerJustification {
  enum class Kind { Rule, BruteForce };
  Kind kind = Kind::BruteForce;
  ExclusionRule rule;  ///< meaningful for Kind::Rule
};

struct EquilibriumCertificate {
  Vertex majority_point;
  /// Settled layers with the reason each is excluded.
  std::map<int, LayerJustification> excluded_layers;
  /// Empty when certified; otherwise the first layer holding a vertex that beats M.
  std::optional<int> first_failing_layer;

  bool certified() const { return !first_failing_layer.has_value(); }
};

/// Settles each layer 1..d by the first rule that excludes it, falling back
/// to an exact scan (payoff exactly 1/2 does not beat M).
EquilibriumCertificate certify_equilibrium(const Distribution& dist, std::span<const ExclusionRule> rules);

}  // namespace hcv
