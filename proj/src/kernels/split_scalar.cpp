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

#include <bit>

#include "hcv/kernels.hpp"

namespace hcv::kernels {

SplitSums split_scalar(std::span<const std::uint64_t> weights, SplitQuery q) {
  SplitSums out;
  const std::uint32_t n = static_cast<std::uint32_t>(weights.size());
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t twice = 2u * static_cast<std::uint32_t>(std::popcount((x ^ q.ref) & q.mask));
    if (twice < q.threshold) {
      out.below += weights[x];
    } else if (twice == q.threshold) {
      out.equal += weights[x];
    }
  }
  return out;
}

BigSplitSums split_big(std::span<const Integer> weights, SplitQuery q) {
  BigSplitSums out;
  const std::uint32_t n = static_cast<std::uint32_t>(weights.size());
  for (std::uint32_t x = 0; x < n; ++x) {
    if (weights[x] == 0) continue;
    const std::uint32_t twice = 2u * static_cast<std::uint32_t>(std::popcount((x ^ q.ref) & q.mask));
    if (twice < q.threshold) {
      out.below += weights[x];
    } else if (twice == q.threshold) {
      out.equal += weights[x];
    }
  }
  return out;
}

}  // namespace hcv::kernels
