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

// Inner loops over the dense 2^d weight table.
//
// Every query has the same shape: for each vertex x, count
//   c(x) = popcount((x ^ ref) & mask)
// and bucket the weight of x by comparing 2 c(x) against a threshold.
// Voronoi partitions, half-cube marginals and coalition weights are all
// instances of it (see core.cpp and game.cpp).
//
// The scalar kernel is the reference. SIMD variants must agree with it
// bit-for-bit; the dispatcher picks the widest one the CPU supports.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hcv/rational.hpp"

namespace hcv::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

struct SplitQuery {
  std::uint32_t ref = 0;
  std::uint32_t mask = 0;
  /// Compared against 2 c(x).
  std::uint32_t threshold = 0;
};

/// Sum of weights with 2 c(x) < threshold, and with 2 c(x) == threshold.
struct SplitSums {
  std::uint64_t below = 0;
  std::uint64_t equal = 0;

  friend bool operator==(const SplitSums&, const SplitSums&) = default;
};

/// Arbitrary-precision counterpart of SplitSums.
struct BigSplitSums {
  Integer below;
  Integer equal;
};

// Fixed-width kernels require the whole table to sum below 2^63.
SplitSums split_scalar(std::span<const std::uint64_t> weights, SplitQuery q);
#if defined(__x86_64__) || defined(_M_X64)
SplitSums split_avx2(std::span<const std::uint64_t> weights, SplitQuery q);
#endif
#if defined(__aarch64__)
SplitSums split_neon(std::span<const std::uint64_t> weights, SplitQuery q);
#endif

BigSplitSums split_big(std::span<const Integer> weights, SplitQuery q);

bool isa_available(Isa isa);
std::vector<Isa> available_isas();

/// Widest available ISA, unless HCV_SIMD=scalar|avx2|neon narrows it.
Isa selected_isa();

SplitSums split(Isa isa, std::span<const std::uint64_t> weights, SplitQuery q);

inline SplitSums split(std::span<const std::uint64_t> weights, SplitQuery q) {
  return split(selected_isa(), weights, q);
}

}  // namespace hcv::kernels
