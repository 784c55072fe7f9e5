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

#include <immintrin.h>

#include "hcv/kernels.hpp"

namespace hcv::kernels {

namespace {

// Per-64-bit-lane popcount: nibble lookup, then sum the 8 bytes of each lane.
__attribute__((target("avx2"))) inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low4 = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low4);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low4);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) inline std::uint64_t hsum_epi64(__m256i v) {
  const __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

}  // namespace

__attribute__((target("avx2"))) SplitSums split_avx2(std::span<const std::uint64_t> weights, SplitQuery q) {
  const std::size_t n = weights.size();
  const std::size_t vec_end = n & ~std::size_t{7};

  const __m256i ref = _mm256_set1_epi64x(q.ref);
  const __m256i mask = _mm256_set1_epi64x(q.mask);
  const __m256i thr = _mm256_set1_epi64x(q.threshold);
  const __m256i step = _mm256_set1_epi64x(8);
  __m256i idx0 = _mm256_setr_epi64x(0, 1, 2, 3);
  __m256i idx1 = _mm256_setr_epi64x(4, 5, 6, 7);
  __m256i below0 = _mm256_setzero_si256();
  __m256i below1 = _mm256_setzero_si256();
  __m256i equal0 = _mm256_setzero_si256();
  __m256i equal1 = _mm256_setzero_si256();

  const auto* base = reinterpret_cast<const __m256i*>(weights.data());
  for (std::size_t i = 0; i < vec_end; i += 8) {
    const __m256i c0 = popcount_epi64(_mm256_and_si256(_mm256_xor_si256(idx0, ref), mask));
    const __m256i c1 = popcount_epi64(_mm256_and_si256(_mm256_xor_si256(idx1, ref), mask));
    const __m256i t0 = _mm256_add_epi64(c0, c0);
    const __m256i t1 = _mm256_add_epi64(c1, c1);
    const __m256i w0 = _mm256_loadu_si256(base + i / 4);
    const __m256i w1 = _mm256_loadu_si256(base + i / 4 + 1);
    // Lanes hold small non-negative counts, so the signed compare is exact.
    below0 = _mm256_add_epi64(below0, _mm256_and_si256(w0, _mm256_cmpgt_epi64(thr, t0)));
    below1 = _mm256_add_epi64(below1, _mm256_and_si256(w1, _mm256_cmpgt_epi64(thr, t1)));
    equal0 = _mm256_add_epi64(equal0, _mm256_and_si256(w0, _mm256_cmpeq_epi64(thr, t0)));
    equal1 = _mm256_add_epi64(equal1, _mm256_and_si256(w1, _mm256_cmpeq_epi64(thr, t1)));
    idx0 = _mm256_add_epi64(idx0, step);
    idx1 = _mm256_add_epi64(idx1, step);
  }

  SplitSums out;
  out.below = hsum_epi64(_mm256_add_epi64(below0, below1));
  out.equal = hsum_epi64(_mm256_add_epi64(equal0, equal1));
  if (vec_end < n) {
    // Tail: at most 7 vertices.
    for (std::size_t x = vec_end; x < n; ++x) {
      const auto twice = 2u * static_cast<std::uint32_t>(
                                  __builtin_popcount((static_cast<std::uint32_t>(x) ^ q.ref) & q.mask));
      if (twice < q.threshold) {
        out.below += weights[x];
      } else if (twice == q.threshold) {
        out.equal += weights[x];
      }
    }
  }
  return out;
}

}  // namespace hcv::kernels
