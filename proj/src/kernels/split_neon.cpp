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

#include <arm_neon.h>

#include <bit>

#include "hcv/kernels.hpp"

namespace hcv::kernels {

SplitSums split_neon(std::span<const std::uint64_t> weights, SplitQuery q) {
  const std::size_t n = weights.size();
  const std::size_t vec_end = n & ~std::size_t{1};

  const uint64x2_t ref = vdupq_n_u64(q.ref);
  const uint64x2_t mask = vdupq_n_u64(q.mask);
  const uint64x2_t thr = vdupq_n_u64(q.threshold);
  const uint64x2_t step = vdupq_n_u64(2);
  const std::uint64_t start[2] = {0, 1};
  uint64x2_t idx = vld1q_u64(start);
  uint64x2_t below = vdupq_n_u64(0);
  uint64x2_t equal = vdupq_n_u64(0);

  for (std::size_t i = 0; i < vec_end; i += 2) {
    const uint64x2_t x = vandq_u64(veorq_u64(idx, ref), mask);
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(x));
    const uint64x2_t c = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes)));
    const uint64x2_t twice = vaddq_u64(c, c);
    const uint64x2_t w = vld1q_u64(weights.data() + i);
    below = vaddq_u64(below, vandq_u64(w, vcltq_u64(twice, thr)));
    equal = vaddq_u64(equal, vandq_u64(w, vceqq_u64(twice, thr)));
    idx = vaddq_u64(idx, step);
  }

  SplitSums out;
  out.below = vgetq_lane_u64(below, 0) + vgetq_lane_u64(below, 1);
  out.equal = vgetq_lane_u64(equal, 0) + vgetq_lane_u64(equal, 1);
  for (std::size_t x = vec_end; x < n; ++x) {
    const auto twice =
        2u * static_cast<std::uint32_t>(std::popcount((static_cast<std::uint32_t>(x) ^ q.ref) & q.mask));
    if (twice < q.threshold) {
      out.below += weights[x];
    } else if (twice == q.threshold) {
      out.equal += weights[x];
    }
  }
  return out;
}

}  // namespace hcv::kernels
