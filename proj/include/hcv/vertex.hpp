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

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hcv {

/// Largest dimension the 32-bit vertex encoding can address at all. The
/// runtime cap in Limits is far smaller.
inline constexpr int kMaxEncodableDimension = 30;

/// A point of Q_d. Coordinate i (1-based) is bit (i - 1) of `bits`.
struct Vertex {
  std::uint32_t bits = 0;

  constexpr Vertex() = default;
  constexpr explicit Vertex(std::uint32_t b) : bits(b) {}

  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

constexpr std::uint32_t cube_size(int d) { return std::uint32_t{1} << d; }
constexpr std::uint32_t full_mask(int d) { return cube_size(d) - 1; }

/// |X|: number of coordinates equal to 1.
constexpr int layer(Vertex x) { return std::popcount(x.bits); }

constexpr Vertex complement(Vertex x, int d) { return Vertex{x.bits ^ full_mask(d)}; }

constexpr int coordinate(Vertex x, int i) { return static_cast<int>((x.bits >> (i - 1)) & 1u); }

constexpr int hamming(Vertex x, Vertex y) { return std::popcount(x.bits ^ y.bits); }

/// [k]: ones on coordinates 1..k.
constexpr Vertex first_k(int k) { return Vertex{(std::uint32_t{1} << k) - 1}; }

constexpr bool in_range(Vertex x, int d) { return x.bits < cube_size(d); }

/// "x1 x2 ... xd" with coordinate 1 leftmost.
std::string to_bitstring(Vertex x, int d);

/// Inverse of to_bitstring. Throws Error(ParseError) on bad length or characters.
Vertex parse_vertex(std::string_view text, int d);

/// A subset of the coordinates {1..d}, stored as a bitmask with the vertex convention.
class CoordinateSet {
 public:
  constexpr CoordinateSet() = default;
  constexpr explicit CoordinateSet(std::uint32_t mask) : mask_(mask) {}

  static CoordinateSet of(std::initializer_list<int> coords) {
    CoordinateSet s;
    for (int c : coords) s.insert(c);
    return s;
  }
  static constexpr CoordinateSet all(int d) { return CoordinateSet(full_mask(d)); }

  constexpr void insert(int i) { mask_ |= std::uint32_t{1} << (i - 1); }
  constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::uint32_t mask() const { return mask_; }

  /// Members in ascending order, 1-based.
  std::vector<int> members() const;

  friend constexpr bool operator==(CoordinateSet, CoordinateSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// X triangle Y as a coordinate set.
constexpr CoordinateSet symmetric_difference(Vertex x, Vertex y) {
  return CoordinateSet(x.bits ^ y.bits);
}

/// All t-element subsets of {1..d} as masks, in increasing numeric order.
std::vector<std::uint32_t> subsets_of_size(int d, int t);

}  // namespace hcv
