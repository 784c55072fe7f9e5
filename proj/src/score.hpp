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

// Integer payoff scores shared by the search routines.
//
// score(A, B) = 2 mu(V(A,B)) D + mu(T(A,B)) D, i.e. P1(A,B) scaled by 2D,
// where D is the distribution's common denominator. Comparing scores is
// comparing payoffs, with no rational arithmetic in the loop.

#include <cstdint>

#include "hcv/core.hpp"

namespace hcv::detail {

inline kernels::SplitQuery payoff_query(Vertex a, Vertex b) {
  const std::uint32_t differ = a.bits ^ b.bits;
  return {a.bits, differ, static_cast<std::uint32_t>(std::popcount(differ))};
}

inline Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }
inline const Integer& to_integer(const Integer& v) { return v; }

inline Rational score_to_payoff(const Distribution& dist, const Integer& score) {
  return ratio(score, 2 * dist.denominator());
}

/// Calls `body(score)` with a callable score(Vertex, Vertex) over 64-bit
/// integers when the scaled table is fixed width, big integers otherwise.
template <class Body>
decltype(auto) with_scorer(const Distribution& dist, Body&& body) {
  if (dist.fixed_width()) {
    const auto isa = kernels::selected_isa();
    const auto table = dist.scaled_fixed();
    return body([isa, table](Vertex a, Vertex b) -> std::uint64_t {
      const auto s = kernels::split(isa, table, payoff_query(a, b));
      return 2 * s.below + s.equal;
    });
  }
  const auto table = dist.scaled_big();
  return body([table](Vertex a, Vertex b) -> Integer {
    auto s = kernels::split_big(table, payoff_query(a, b));
    return 2 * s.below + s.equal;
  });
}

}  // namespace hcv::detail
