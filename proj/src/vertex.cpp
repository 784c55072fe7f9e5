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

#include "hcv/vertex.hpp"

#include "hcv/error.hpp"

namespace hcv {

std::string to_bitstring(Vertex x, int d) {
  std::string s(static_cast<std::size_t>(d), '0');
  for (int i = 1; i <= d; ++i) {
    if (coordinate(x, i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

Vertex parse_vertex(std::string_view text, int d) {
  if (static_cast<int>(text.size()) != d) {
    throw Error(ErrorCode::ParseError, "vertex '" + std::string(text) + "' must have exactly " +
                                           std::to_string(d) + " characters");
  }
  std::uint32_t bits = 0;
  for (int i = 0; i < d; ++i) {
    char c = text[static_cast<std::size_t>(i)];
    if (c == '1') {
      bits |= std::uint32_t{1} << i;
    } else if (c != '0') {
      throw Error(ErrorCode::ParseError, "vertex '" + std::string(text) + "' contains non-binary character");
    }
  }
  return Vertex{bits};
}

std::vector<int> CoordinateSet::members() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::vector<std::uint32_t> subsets_of_size(int d, int t) {
  std::vector<std::uint32_t> out;
  if (t < 0 || t > d) return out;
  if (t == 0) return {0u};
  const std::uint64_t limit = std::uint64_t{1} << d;
  // Gosper's hack: next larger integer with the same popcount.
  std::uint64_t s = (std::uint64_t{1} << t) - 1;
  while (s < limit) {
    out.push_back(static_cast<std::uint32_t>(s));
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

}  // namespace hcv
