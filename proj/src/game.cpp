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

#include "hcv/game.hpp"

#include <algorithm>
#include <string>

#include "hcv/error.hpp"
#include "score.hpp"

namespace hcv {

using detail::payoff_query;
using detail::score_to_payoff;
using detail::to_integer;
using detail::with_scorer;

PayoffBreakdown voronoi_measures(const Distribution& dist, Vertex a, Vertex b) {
  const auto s = dist.split(payoff_query(a, b));
  const Integer& den = dist.denominator();
  PayoffBreakdown out;
  out.v_ab = ratio(s.below, den);
  out.tie = ratio(s.equal, den);
  out.v_ba = ratio(den - s.below - s.equal, den);
  return out;
}

Rational payoff(const Distribution& dist, Vertex a, Vertex b) {
  const auto s = dist.split(payoff_query(a, b));
  return score_to_payoff(dist, 2 * s.below + s.equal);
}

BestResponseResult best_responses(const Distribution& dist, Vertex opponent) {
  return with_scorer(dist, [&](auto score) {
    using Score = decltype(score(opponent, opponent));
    Score best = score(Vertex{0}, opponent);
    std::vector<Vertex> argmax{Vertex{0}};
    for (std::uint32_t x = 1; x < dist.size(); ++x) {
      Score s = score(Vertex{x}, opponent);
      if (s > best) {
        best = std::move(s);
        argmax.assign(1, Vertex{x});
      } else if (s == best) {
        argmax.push_back(Vertex{x});
      }
    }
    return BestResponseResult{score_to_payoff(dist, to_integer(best)), std::move(argmax)};
  });
}

namespace {

/// True when no deviation from `a` within `radius` beats P1(a, b).
template <class Score>
bool no_improvement(const Distribution& dist, const Score& score, Vertex a, Vertex b, int radius) {
  const auto current = score(a, b);
  for (std::uint32_t x = 0; x < dist.size(); ++x) {
    if (x == a.bits || hamming(Vertex{x}, a) > radius) continue;
    if (score(Vertex{x}, b) > current) return false;
  }
  return true;
}

}  // namespace

bool is_equilibrium(const Distribution& dist, Vertex a, Vertex b) {
  const int d = dist.dimension();
  return with_scorer(dist, [&](auto score) {
    return no_improvement(dist, score, a, b, d) && no_improvement(dist, score, b, a, d);
  });
}

bool is_k_local_equilibrium(const Distribution& dist, Vertex a, Vertex b, int k) {
  if (k < 0 || k > dist.dimension()) {
    throw Error(ErrorCode::BadRadius, "k = " + std::to_string(k) + " not in [0, d]");
  }
  return with_scorer(dist, [&](auto score) {
    return no_improvement(dist, score, a, b, k) && no_improvement(dist, score, b, a, k);
  });
}

bool EquilibriumSet::contains(Vertex a, Vertex b) const {
  return std::binary_search(pairs.begin(), pairs.end(), VertexPair{a, b});
}

namespace {

void check_pair_scan(const Distribution& dist, const Limits& limits) {
  if (dist.dimension() > limits.max_pair_scan_dimension) {
    throw Error(ErrorCode::ComputationGated, "pair scan at d = " + std::to_string(dist.dimension()) +
                                                 " exceeds cap " + std::to_string(limits.max_pair_scan_dimension));
  }
}

}  // namespace

EquilibriumSet find_equilibria(const Distribution& dist, const Limits& limits) {
  const auto report = majority_report(dist);
  EquilibriumSet out;
  if (report.majority_point) {
    const Vertex m = *report.majority_point;
    if (is_equilibrium(dist, m, m)) out.pairs.emplace_back(m, m);
    return out;
  }

  check_pair_scan(dist, limits);
  const auto candidates = report.subcube_vertices();
  return with_scorer(dist, [&](auto score) {
    using Score = decltype(score(Vertex{0}, Vertex{0}));
    // Best achievable score against each candidate opponent, over all 2^d responses.
    std::vector<Score> best;
    best.reserve(candidates.size());
    for (Vertex opp : candidates) {
      Score top = score(Vertex{0}, opp);
      for (std::uint32_t x = 1; x < dist.size(); ++x) {
        Score s = score(Vertex{x}, opp);
        if (s > top) top = std::move(s);
      }
      best.push_back(std::move(top));
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      for (std::size_t j = 0; j < candidates.size(); ++j) {
        const Vertex a = candidates[i];
        const Vertex b = candidates[j];
        if (score(a, b) == best[j] && score(b, a) == best[i]) out.pairs.emplace_back(a, b);
      }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
  });
}

EquilibriumSet find_equilibria_exhaustive(const Distribution& dist, const Limits& limits) {
  check_pair_scan(dist, limits);
  const std::uint32_t n = dist.size();
  return with_scorer(dist, [&](auto score) {
    using Score = decltype(score(Vertex{0}, Vertex{0}));
    std::vector<Score> table(static_cast<std::size_t>(n) * n);
    std::vector<Score> best(n);
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t a = 0; a < n; ++a) {
        Score s = score(Vertex{a}, Vertex{b});
        if (a == 0 || s > best[b]) best[b] = s;
        table[static_cast<std::size_t>(a) * n + b] = std::move(s);
      }
    }
    EquilibriumSet out;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (table[static_cast<std::size_t>(a) * n + b] == best[b] &&
            table[static_cast<std::size_t>(b) * n + a] == best[a]) {
          out.pairs.emplace_back(Vertex{a}, Vertex{b});
        }
      }
    }
    return out;
  });
}

Distribution restrict(const Distribution& dist, Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorCode::EqualPoints, "restriction needs A != B");
  const auto coords = symmetric_difference(a, b).members();
  const int s = static_cast<int>(coords.size());
  std::vector<Rational> weights(cube_size(s));
  for (std::uint32_t x = 0; x < dist.size(); ++x) {
    const auto& w = dist.weights()[x];
    if (w == 0) continue;
    const std::uint32_t agree_b = x ^ a.bits;
    std::uint32_t u = 0;
    for (int j = 0; j < s; ++j) u |= ((agree_b >> (coords[static_cast<std::size_t>(j)] - 1)) & 1u) << j;
    weights[u] += w;
  }
  return Distribution::from_weights(s, std::move(weights));
}

Rational payoff_via_restriction(const Distribution& dist, Vertex a, Vertex b) {
  const Distribution r = restrict(dist, a, b);
  const int s = r.dimension();
  Rational upper;
  Rational middle;
  for (std::uint32_t u = 0; u < r.size(); ++u) {
    const int k = layer(Vertex{u});
    if (2 * k > s) {
      upper += r.weights()[u];
    } else if (2 * k == s) {
      middle += r.weights()[u];
    }
  }
  return 1 - (upper + middle / 2);
}

}  // namespace hcv
