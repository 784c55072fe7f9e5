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

#include <cstdlib>
#include <string>

#include "hcv/error.hpp"
#include "hcv/kernels.hpp"

namespace hcv::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

namespace {

Isa detect() {
  Isa best = Isa::Scalar;
  if (isa_available(Isa::Avx2)) best = Isa::Avx2;
  if (isa_available(Isa::Neon)) best = Isa::Neon;
  if (const char* forced = std::getenv("HCV_SIMD")) {
    const std::string want(forced);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == to_string(isa) && isa_available(isa)) return isa;
    }
  }
  return best;
}

}  // namespace

Isa selected_isa() {
  static const Isa isa = detect();
  return isa;
}

SplitSums split(Isa isa, std::span<const std::uint64_t> weights, SplitQuery q) {
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2:
      return split_avx2(weights, q);
#endif
#if defined(__aarch64__)
    case Isa::Neon:
      return split_neon(weights, q);
#endif
    default:
      return split_scalar(weights, q);
  }
}

}  // namespace hcv::kernels
