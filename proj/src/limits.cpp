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

#include "hcv/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "hcv/vertex.hpp"

namespace hcv {

namespace {

void read_int(const char* name, int& into) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  std::string_view s(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec == std::errc() && ptr == s.data() + s.size() && value >= 1 && value <= kMaxEncodableDimension) {
    into = value;
  }
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  read_int("HCV_MAX_DIM", l.max_dimension);
  read_int("HCV_MAX_PAIR_DIM", l.max_pair_scan_dimension);
  return l;
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_env();
  return limits;
}

}  // namespace hcv
