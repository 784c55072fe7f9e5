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

// Hypercube geometry and exact voter distributions on Q_d.

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hcv/kernels.hpp"
#include "hcv/limits.hpp"
#include "hcv/rational.hpp"
#include "hcv/vertex.hpp"

namespace hcv {

/// An exact probability measure on Q_d, stored densely by vertex index.
///
/// Immutable once built; copies share storage. Alongside the rational table
/// the constructor keeps every weight scaled to the least common
/// denominator D, as 64-bit integers when D < 2^63 (so any partial sum
/// fits) and as big integers otherwise. Partition sums over the scaled
/// table are exact integer numerators over D.
class Distribution {
 public:
  /// Validates nonnegativity, exact unit total and the dimension cap.
  static Distribution from_weights(int d, std::vector<Rational> weights,
                                   const Limits& limits = default_limits());

  int dimension() const { return data_->d; }
  std::uint32_t size() const { return cube_size(data_->d); }
  const Rational& weight(Vertex x) const { return data_->weights[x.bits]; }
  std::span<const Rational> weights() const { return data_->weights; }

  /// D: least common denominator of all weights.
  const Integer& denominator() const { return data_->denominator; }
  bool fixed_width() const { return !data_->fixed.empty(); }
  std::span<const std::uint64_t> scaled_fixed() const { return data_->fixed; }
  std::span<const Integer> scaled_big() const { return data_->big; }

  /// Runs a split query on the scaled table with the selected kernel.
  /// Results are numerators over denominator().
  kernels::BigSplitSums split(kernels::SplitQuery q) const;

  /// Same, but always through the given fixed-width ISA when the table is fixed width.
  kernels::BigSplitSums split(kernels::Isa isa, kernels::SplitQuery q) const;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.dimension() == b.dimension() && std::equal(a.weights().begin(), a.weights().end(),
                                                        b.weights().begin());
  }

 private:
  struct Data {
    int d = 0;
    std::vector<Rational> weights;
    Integer denominator;
    std::vector<std::uint64_t> fixed;
    std::vector<Integer> big;
  };
  explicit Distribution(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Throws InvalidDimension (d < 1) or DimensionTooLarge.
void check_dimension(int d, const Limits& limits = default_limits());

/// Unlisted vertices get weight 0. With `normalize`, weights are divided by
/// their exact total; otherwise the total must already be exactly 1.
Distribution make_distribution(int d, const std::vector<std::pair<Vertex, Rational>>& entries,
                               bool normalize, const Limits& limits = default_limits());

Distribution uniform(int d);
Distribution point_mass(int d, Vertex x);

/// Independent coordinates: coordinate i is 1 with probability p[i-1].
Distribution product(std::span<const Rational> p);

/// (1 - alpha) product(p1, ..., p1) + alpha product(p2, ..., p2).
Distribution mixed_product(int d, const Rational& alpha, const Rational& p1, const Rational& p2);

/// w_i^0: weight of the half-cube x_i = 0. Coordinates are 1-based.
Rational marginal_zero(const Distribution& dist, int i);

/// w_I^m: weight of vertices with at most m ones among the coordinates in I.
Rational coalition_weight(const Distribution& dist, CoordinateSet coords, int m);

enum class Majority { Zero, One, Balanced };

struct MajorityReport {
  std::vector<Rational> marginals;            ///< w_i^0, index i - 1
  std::vector<Majority> classification;       ///< per coordinate
  std::optional<Vertex> majority_point;       ///< present iff nothing is balanced
  CoordinateSet free_coords;                  ///< balanced coordinates

  /// Vertices of the majority subcube: majority value on every unbalanced
  /// coordinate, free on the balanced ones.
  std::vector<Vertex> subcube_vertices() const;
  /// Majority values on unbalanced coordinates (bits of free coords are 0).
  Vertex subcube_base() const;
};

MajorityReport majority_report(const Distribution& dist);

enum class Monotonicity { Decreasing, Increasing };

/// Decreasing: mu(X) >= mu(Y) whenever X is a subset of Y. Checked on covering pairs.
bool is_monotone(const Distribution& dist, Monotonicity direction);

struct CanonicalForm {
  Distribution dist;
  Vertex flip_mask;
};

/// Relabels 0/1 on every coordinate with w_i^0 < 1/2, so the result has
/// majority point 0. Throws BalancedCoordinate.
CanonicalForm canonicalize_zero_majority(const Distribution& dist);

/// A hypercube automorphism: coordinate i moves to permutation[i-1]
/// (1-based), then the vertex is XORed with `flip`.
struct Automorphism {
  std::vector<int> permutation;
  Vertex flip;

  Vertex apply(Vertex x) const;
};

/// The pushed-forward distribution: weight of apply(x) is weight of x.
Distribution transform(const Distribution& dist, const Automorphism& map);

/// XOR relabelling only.
Distribution flip(const Distribution& dist, Vertex mask);

}  // namespace hcv
