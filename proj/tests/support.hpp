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

// Brute-force oracles and seeded samplers shared by the test binaries.
//
// The oracles only use the rational weight table and Hamming distances; they
// never touch the scaled integer table or the split kernels.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hcv/core.hpp"
#include "hcv/error.hpp"
#include "hcv/game.hpp"

namespace hcv::testing {

using Rng = std::mt19937_64;

/// The code of the hcv::Error thrown by f, or nullopt if nothing is thrown.
template <class F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Rational oracle_payoff(const Distribution& dist, Vertex a, Vertex b) {
  Rational total = 0;
  for (std::uint32_t x = 0; x < dist.size(); ++x) {
    const int da = hamming(Vertex{x}, a);
    const int db = hamming(Vertex{x}, b);
    if (da < db) {
      total += dist.weights()[x];
    } else if (da == db) {
      total += dist.weights()[x] / 2;
    }
  }
  return total;
}

/// Best payoff against `opponent` over responses within distance k of `centre`.
inline Rational oracle_best_local(const Distribution& dist, Vertex opponent, Vertex centre, int k) {
  Rational best = -1;
  for (std::uint32_t y = 0; y < dist.size(); ++y) {
    if (hamming(Vertex{y}, centre) > k) continue;
    Rational p = oracle_payoff(dist, Vertex{y}, opponent);
    if (p > best) best = p;
  }
  return best;
}

inline Rational oracle_best_value(const Distribution& dist, Vertex opponent) {
  return oracle_best_local(dist, opponent, Vertex{0}, dist.dimension());
}

inline bool oracle_is_equilibrium(const Distribution& dist, Vertex a, Vertex b) {
  return oracle_payoff(dist, a, b) == oracle_best_value(dist, b) &&
         oracle_payoff(dist, b, a) == oracle_best_value(dist, a);
}

inline bool oracle_is_k_local(const Distribution& dist, Vertex a, Vertex b, int k) {
  return oracle_payoff(dist, a, b) == oracle_best_local(dist, b, a, k) &&
         oracle_payoff(dist, b, a) == oracle_best_local(dist, a, b, k);
}

inline Rational oracle_marginal_zero(const Distribution& dist, int i) {
  Rational total = 0;
  for (std::uint32_t x = 0; x < dist.size(); ++x) {
    if (coordinate(Vertex{x}, i) == 0) total += dist.weights()[x];
  }
  return total;
}

inline std::vector<Rational> positive_integer_weights(int d, Rng& rng, int max_weight = 20) {
  std::uniform_int_distribution<int> pick(1, max_weight);
  std::vector<Rational> w(cube_size(d));
  Rational total = 0;
  for (auto& x : w) {
    x = pick(rng);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

/// Random weights with roughly a third of the vertices empty.
inline Distribution random_distribution(int d, Rng& rng, int max_weight = 20) {
  std::uniform_int_distribution<int> pick(0, max_weight);
  std::vector<std::pair<Vertex, Rational>> entries;
  for (std::uint32_t x = 0; x < cube_size(d); ++x) {
    int w = pick(rng);
    if (w <= max_weight / 3) continue;
    entries.emplace_back(Vertex{x}, Rational(w));
  }
  if (entries.empty()) entries.emplace_back(Vertex{0}, Rational(1));
  return make_distribution(d, entries, true);
}

inline Vertex random_vertex(int d, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, cube_size(d) - 1);
  return Vertex{pick(rng)};
}

/// beta delta_M + (1 - beta) base with a strictly positive base, so every
/// marginal on the M side is strictly above beta and M is the majority point.
inline Distribution mixture_at_threshold(int d, const Rational& beta, Vertex m, Rng& rng) {
  auto w = positive_integer_weights(d, rng);
  for (auto& x : w) x *= (1 - beta);
  w[m.bits] += beta;
  return Distribution::from_weights(d, std::move(w));
}

/// mu(X) = sum over supersets Y of X of r(Y): decreasing along inclusion.
inline Distribution random_decreasing(int d, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 6);
  std::vector<Rational> r(cube_size(d));
  for (auto& x : r) x = pick(rng);
  r[full_mask(d)] += 1;
  std::vector<Rational> w(cube_size(d));
  Rational total = 0;
  for (std::uint32_t x = 0; x < cube_size(d); ++x) {
    for (std::uint32_t y = 0; y < cube_size(d); ++y) {
      if ((x & y) == x) w[x] += r[y];
    }
    total += w[x];
  }
  for (auto& x : w) x /= total;
  return Distribution::from_weights(d, std::move(w));
}

/// Averages a random table over flips of `free_mask`, which makes exactly
/// those coordinates balanced (others stay generic).
inline Distribution random_balanced(int d, std::uint32_t free_mask, Rng& rng) {
  auto base = positive_integer_weights(d, rng);
  std::vector<Rational> w(cube_size(d));
  std::vector<std::uint32_t> flips;
  for (std::uint32_t f = free_mask;; f = (f - 1) & free_mask) {
    flips.push_back(f);
    if (f == 0) break;
  }
  for (std::uint32_t x = 0; x < cube_size(d); ++x) {
    for (std::uint32_t f : flips) w[x] += base[x ^ f];
    w[x] /= static_cast<long>(flips.size());
  }
  return Distribution::from_weights(d, std::move(w));
}

}  // namespace hcv::testing
