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

// Named distributions with known equilibrium behaviour, each carrying the
// facts it is known for as executable claims.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hcv/core.hpp"

namespace hcv {

/// d = 3; 2/5 at 000 and 1/5 at each of 011, 101, 110. No equilibrium,
/// although (000, 000) is 2-local.
Distribution intro_example();

/// d = 3; 3/10 at 001, 010, 100 and 1/10 at 111. Marginals 3/5 sit below the
/// global threshold, yet the pair coalition bound certifies (000, 000).
Distribution coalition_example();

/// Odd d >= 3, 0 < eps < 1/2: weight 1/2 - eps at 0...0 and the remaining
/// 1/2 + eps spread evenly over layer (d+1)/2. Marginals approach the global
/// threshold from below and there is no equilibrium.
Distribution no_equilibrium_odd(int d, const Rational& eps);

/// Even d >= 4: the odd construction placed in the subcube x_d = 0.
Distribution no_equilibrium_even(int d, const Rational& eps);

/// Odd d: uniform on even-parity vertices (2^(1-d) each). Non-antipodal
/// pairs split the vote evenly. Equilibria are exactly the pairs of
/// odd-parity vertices when d = 3 (mod 4), and of even-parity vertices when
/// d = 1 (mod 4).
Distribution parity_example(int d);

/// d = 5, 0 < eps < 3/5: weight by layer, w(0) = (1-eps)/16 + 3eps/8,
/// w(2) = (1-eps)/16, w(4) = (1-eps)/16 + eps/8, odd layers empty.
/// Balanced, with no equilibrium.
Distribution layered_d5(const Rational& eps);

struct Claim {
  std::string description;
  std::function<bool(const Distribution&)> check;
};

struct CatalogEntry {
  std::string name;
  std::optional<int> d;
  std::optional<Rational> eps;
  Distribution distribution;
  std::vector<Claim> claims;

  /// e.g. "uniform d=2", "layered_d5 eps=1/4".
  std::string label() const;
};

std::vector<CatalogEntry> catalog();

/// Names accepted by construct_by_name.
std::vector<std::string> construction_names();

/// Builds a named construction; `d` and `eps` fall back to catalog defaults
/// when absent. Throws UnknownName.
Distribution construct_by_name(const std::string& name, std::optional<int> d, std::optional<Rational> eps);

}  // namespace hcv
