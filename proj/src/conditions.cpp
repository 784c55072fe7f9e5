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

#include "hcv/conditions.hpp"

#include <string>

#include "hcv/error.hpp"
#include "hcv/game.hpp"
#include "score.hpp"

namespace hcv {

namespace {

ConditionVerdict verdict_against(const Distribution& dist, Rational threshold) {
  const auto canon = canonicalize_zero_majority(dist);
  ConditionVerdict v;
  v.holds = true;
  v.majority_point = canon.flip_mask;
  for (int i = 1; i <= dist.dimension(); ++i) {
    Rational slack = marginal_zero(canon.dist, i) - threshold;
    if (slack < 0) v.holds = false;
    v.per_coordinate_slack.push_back(std::move(slack));
  }
  v.threshold = std::move(threshold);
  return v;
}

void check_rule(int t, int m) {
  if (t < 1 || m < 0 || 2 * m > t) {
    throw Error(ErrorCode::BadParameters,
                "need t >= 1 and 0 <= m <= t/2, got t = " + std::to_string(t) + ", m = " + std::to_string(m));
  }
}

}  // namespace

Rational global_threshold(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidDimension, "dimension must be at least 1");
  if (d == 1) return Rational(1, 2);
  const int effective = d % 2 == 1 ? d : d - 1;
  return Rational(3, 4) - make_rational(1, 4L * effective);
}

ConditionVerdict check_global_sufficient(const Distribution& dist) {
  return verdict_against(dist, global_threshold(dist.dimension()));
}

Rational local_threshold(int k) {
  if (k < 1) throw Error(ErrorCode::BadRadius, "k must be at least 1");
  return Rational(3, 4) - make_rational(1, 4L * k);
}

ConditionVerdict check_local_sufficient(const Distribution& dist, int k) {
  if (k < 1 || k > dist.dimension()) {
    throw Error(ErrorCode::BadRadius, "k = " + std::to_string(k) + " not in [1, d]");
  }
  return verdict_against(dist, local_threshold(k));
}

Rational layer_exclusion_bound(int t, int m, int k) {
  check_rule(t, m);
  if (t > k) throw Error(ErrorCode::BadParameters, "need t <= k");
  const long lower = (k - 1) / 2;
  const long upper = (k + 2) / 2;  // ceil((k+1)/2)
  Integer sum;
  for (int i = 0; i <= m; ++i) sum += binomial(lower, t - i) * binomial(upper, i);
  return (1 + ratio(sum, binomial(k, t))) / 2;
}

std::vector<int> excluded_layers(const Distribution& dist, int t, int m) {
  check_rule(t, m);
  const int d = dist.dimension();
  if (t > d) throw Error(ErrorCode::BadParameters, "need t <= d");
  const auto canon = canonicalize_zero_majority(dist);

  std::optional<Rational> weakest;
  for (std::uint32_t mask : subsets_of_size(d, t)) {
    Rational w = coalition_weight(canon.dist, CoordinateSet(mask), m);
    if (!weakest || w < *weakest) weakest = std::move(w);
  }
  std::vector<int> out;
  for (int k = t; k <= d; ++k) {
    if (*weakest >= layer_exclusion_bound(t, m, k)) out.push_back(k);
  }
  return out;
}

EquilibriumCertificate certify_equilibrium(const Distribution& dist, std::span<const ExclusionRule> rules) {
  const auto canon = canonicalize_zero_majority(dist);
  const int d = dist.dimension();
  EquilibriumCertificate cert;
  cert.majority_point = canon.flip_mask;

  for (const auto& rule : rules) {
    for (int k : excluded_layers(canon.dist, rule.t, rule.m)) {
      cert.excluded_layers.try_emplace(k, LayerJustification{LayerJustification::Kind::Rule, rule});
    }
  }

  const Distribution& z = canon.dist;
  const Vertex origin{0};
  detail::with_scorer(z, [&](auto score) {
    // Against M = 0 a score above D means a payoff above 1/2.
    const Integer& den = z.denominator();
    for (int k = 1; k <= d; ++k) {
      if (cert.excluded_layers.contains(k)) continue;
      bool beaten = false;
      for (std::uint32_t x = 0; x < z.size() && !beaten; ++x) {
        if (layer(Vertex{x}) != k) continue;
        beaten = detail::to_integer(score(Vertex{x}, origin)) > den;
      }
      if (beaten) {
        cert.first_failing_layer = k;
        return;
      }
      cert.excluded_layers.emplace(k, LayerJustification{});
    }
  });
  return cert;
}

}  // namespace hcv
