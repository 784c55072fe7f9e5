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

#include "hcv/core.hpp"

#include <limits>
#include <set>
#include <string>

#include "hcv/error.hpp"

namespace hcv {

namespace {

const Rational& half() {
  static const Rational h(1, 2);
  return h;
}

std::string vertex_label(Vertex x) { return "vertex index " + std::to_string(x.bits); }

}  // namespace

void check_dimension(int d, const Limits& limits) {
  if (d < 1) throw Error(ErrorCode::InvalidDimension, "dimension must be at least 1, got " + std::to_string(d));
  if (d > limits.max_dimension || d > kMaxEncodableDimension) {
    throw Error(ErrorCode::DimensionTooLarge, "dimension " + std::to_string(d) + " exceeds cap " +
                                                  std::to_string(limits.max_dimension));
  }
}

Distribution Distribution::from_weights(int d, std::vector<Rational> weights, const Limits& limits) {
  check_dimension(d, limits);
  if (weights.size() != cube_size(d)) {
    throw Error(ErrorCode::ParameterOutOfRange, "weight table must have 2^d entries");
  }
  Rational total;
  Integer denominator = 1;
  for (std::uint32_t x = 0; x < weights.size(); ++x) {
    auto& w = weights[x];
    w.canonicalize();
    if (w < 0) throw Error(ErrorCode::NegativeWeight, vertex_label(Vertex{x}) + " has negative weight");
    total += w;
    mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), w.get_den_mpz_t());
  }
  if (total != 1) throw Error(ErrorCode::SumNotOne, "weights sum to " + to_string(total));

  auto data = std::make_shared<Data>();
  data->d = d;
  data->denominator = denominator;
  // Scaled weights sum to exactly D, so D < 2^63 bounds every partial sum.
  const bool fits = mpz_sizeinbase(denominator.get_mpz_t(), 2) <= 62;
  if (fits) {
    data->fixed.reserve(weights.size());
    for (const auto& w : weights) {
      Integer scaled = w.get_num() * (denominator / w.get_den());
      data->fixed.push_back(scaled.get_ui());
    }
  } else {
    data->big.reserve(weights.size());
    for (const auto& w : weights) data->big.push_back(w.get_num() * (denominator / w.get_den()));
  }
  data->weights = std::move(weights);
  return Distribution(std::move(data));
}

kernels::BigSplitSums Distribution::split(kernels::SplitQuery q) const {
  return split(kernels::selected_isa(), q);
}

kernels::BigSplitSums Distribution::split(kernels::Isa isa, kernels::SplitQuery q) const {
  if (fixed_width()) {
    const auto s = kernels::split(isa, data_->fixed, q);
    return {Integer(static_cast<unsigned long>(s.below)), Integer(static_cast<unsigned long>(s.equal))};
  }
  return kernels::split_big(data_->big, q);
}

Distribution make_distribution(int d, const std::vector<std::pair<Vertex, Rational>>& entries, bool normalize,
                               const Limits& limits) {
  check_dimension(d, limits);
  std::vector<Rational> weights(cube_size(d));
  std::vector<bool> seen(cube_size(d), false);
  Rational total;
  for (const auto& [x, w] : entries) {
    if (!in_range(x, d)) throw Error(ErrorCode::VertexOutOfRange, vertex_label(x) + " outside Q_" + std::to_string(d));
    if (seen[x.bits]) throw Error(ErrorCode::DuplicateVertex, vertex_label(x) + " listed twice");
    if (w < 0) throw Error(ErrorCode::NegativeWeight, vertex_label(x) + " has negative weight");
    seen[x.bits] = true;
    weights[x.bits] = w;
    total += w;
  }
  if (normalize) {
    if (total == 0) throw Error(ErrorCode::ZeroTotal, "cannot normalize: weights sum to zero");
    for (auto& w : weights) w /= total;
  } else if (total != 1) {
    throw Error(ErrorCode::SumNotOne, "weights sum to " + to_string(total));
  }
  return Distribution::from_weights(d, std::move(weights), limits);
}

Distribution uniform(int d) {
  check_dimension(d);
  const Rational w(1, Integer(1) << d);
  return Distribution::from_weights(d, std::vector<Rational>(cube_size(d), w));
}

Distribution point_mass(int d, Vertex x) {
  return make_distribution(d, {{x, Rational(1)}}, false);
}

Distribution product(std::span<const Rational> p) {
  const int d = static_cast<int>(p.size());
  check_dimension(d);
  for (const auto& pi : p) {
    if (pi <= 0 || pi >= 1) throw Error(ErrorCode::ProbabilityOutOfRange, "p_i = " + to_string(pi) + " not in (0,1)");
  }
  std::vector<Rational> weights(cube_size(d));
  for (std::uint32_t x = 0; x < weights.size(); ++x) {
    Rational w = 1;
    for (int i = 1; i <= d; ++i) {
      if (coordinate(Vertex{x}, i)) {
        w *= p[static_cast<std::size_t>(i - 1)];
      } else {
        w *= 1 - p[static_cast<std::size_t>(i - 1)];
      }
    }
    weights[x] = w;
  }
  return Distribution::from_weights(d, std::move(weights));
}

Distribution mixed_product(int d, const Rational& alpha, const Rational& p1, const Rational& p2) {
  check_dimension(d);
  if (!(alpha > 0 && alpha < 1) || !(p1 > 0 && p1 < half()) || !(p2 > half() && p2 < 1)) {
    throw Error(ErrorCode::ParameterOutOfRange, "need 0 < alpha < 1 and 0 < p1 < 1/2 < p2 < 1");
  }
  std::vector<Rational> by_layer(static_cast<std::size_t>(d) + 1);
  const Rational q1 = 1 - p1;
  const Rational q2 = 1 - p2;
  for (int k = 0; k <= d; ++k) {
    const auto ones = static_cast<unsigned long>(k);
    const auto zeros = static_cast<unsigned long>(d - k);
    by_layer[static_cast<std::size_t>(k)] =
        (1 - alpha) * pow(p1, ones) * pow(q1, zeros) + alpha * pow(p2, ones) * pow(q2, zeros);
  }
  std::vector<Rational> weights(cube_size(d));
  for (std::uint32_t x = 0; x < weights.size(); ++x) {
    weights[x] = by_layer[static_cast<std::size_t>(layer(Vertex{x}))];
  }
  return Distribution::from_weights(d, std::move(weights));
}

Rational marginal_zero(const Distribution& dist, int i) {
  if (i < 1 || i > dist.dimension()) {
    throw Error(ErrorCode::CoordinateOutOfRange, "coordinate " + std::to_string(i) + " not in [1, d]");
  }
  // x_i = 0  <=>  2 popcount(x & e_i) < 1
  const auto s = dist.split({0u, std::uint32_t{1} << (i - 1), 1u});
  return ratio(s.below, dist.denominator());
}

Rational coalition_weight(const Distribution& dist, CoordinateSet coords, int m) {
  if (coords.empty()) throw Error(ErrorCode::EmptySet, "coordinate set is empty");
  if ((coords.mask() & ~full_mask(dist.dimension())) != 0) {
    throw Error(ErrorCode::CoordinateOutOfRange, "coordinate set exceeds dimension");
  }
  if (m < 0 || m > coords.size()) {
    throw Error(ErrorCode::BadM, "m = " + std::to_string(m) + " not in [0, |I|]");
  }
  // popcount <= m  <=>  2 popcount < 2m + 1
  const auto s = dist.split({0u, coords.mask(), static_cast<std::uint32_t>(2 * m + 1)});
  return ratio(s.below, dist.denominator());
}

std::vector<Vertex> MajorityReport::subcube_vertices() const {
  const Vertex base = subcube_base();
  std::vector<Vertex> out;
  const std::uint32_t free = free_coords.mask();
  // Enumerate submasks of `free` in increasing order.
  std::uint32_t sub = 0;
  do {
    out.push_back(Vertex{base.bits | sub});
    sub = (sub - free) & free;
  } while (sub != 0);
  return out;
}

Vertex MajorityReport::subcube_base() const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < classification.size(); ++i) {
    if (classification[i] == Majority::One) bits |= std::uint32_t{1} << i;
  }
  return Vertex{bits};
}

MajorityReport majority_report(const Distribution& dist) {
  MajorityReport r;
  const int d = dist.dimension();
  for (int i = 1; i <= d; ++i) {
    Rational w = marginal_zero(dist, i);
    if (w > half()) {
      r.classification.push_back(Majority::Zero);
    } else if (w < half()) {
      r.classification.push_back(Majority::One);
    } else {
      r.classification.push_back(Majority::Balanced);
      r.free_coords.insert(i);
    }
    r.marginals.push_back(std::move(w));
  }
  if (r.free_coords.empty()) r.majority_point = r.subcube_base();
  return r;
}

bool is_monotone(const Distribution& dist, Monotonicity direction) {
  const int d = dist.dimension();
  const auto w = dist.weights();
  for (std::uint32_t x = 0; x < dist.size(); ++x) {
    for (int i = 0; i < d; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (x & bit) continue;
      const auto& lower = w[x];
      const auto& upper = w[x | bit];
      if (direction == Monotonicity::Decreasing ? lower < upper : lower > upper) return false;
    }
  }
  return true;
}

Distribution flip(const Distribution& dist, Vertex mask) {
  std::vector<Rational> weights(dist.size());
  for (std::uint32_t x = 0; x < dist.size(); ++x) weights[x ^ mask.bits] = dist.weights()[x];
  return Distribution::from_weights(dist.dimension(), std::move(weights));
}

CanonicalForm canonicalize_zero_majority(const Distribution& dist) {
  const auto report = majority_report(dist);
  if (!report.majority_point) {
    throw Error(ErrorCode::BalancedCoordinate, "coordinate " + std::to_string(report.free_coords.members().front()) +
                                                   " has w_i^0 = 1/2");
  }
  const Vertex mask = *report.majority_point;
  if (mask.bits == 0) return {dist, mask};
  return {flip(dist, mask), mask};
}

Vertex Automorphism::apply(Vertex x) const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if ((x.bits >> i) & 1u) bits |= std::uint32_t{1} << (permutation[i] - 1);
  }
  return Vertex{bits ^ flip.bits};
}

Distribution transform(const Distribution& dist, const Automorphism& map) {
  const int d = dist.dimension();
  if (static_cast<int>(map.permutation.size()) != d) {
    throw Error(ErrorCode::ParameterOutOfRange, "permutation length must equal d");
  }
  std::set<int> targets(map.permutation.begin(), map.permutation.end());
  if (static_cast<int>(targets.size()) != d || *targets.begin() != 1 || *targets.rbegin() != d) {
    throw Error(ErrorCode::ParameterOutOfRange, "not a permutation of 1..d");
  }
  std::vector<Rational> weights(dist.size());
  for (std::uint32_t x = 0; x < dist.size(); ++x) weights[map.apply(Vertex{x}).bits] = dist.weights()[x];
  return Distribution::from_weights(d, std::move(weights));
}

}  // namespace hcv
