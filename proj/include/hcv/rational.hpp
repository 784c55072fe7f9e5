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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hcv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a/b", an integer, or a terminating decimal ("0.3", "-1.25", ".5")
/// into an exact canonical rational. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Canonical exact form: "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

/// Non-authoritative decimal rendering with a fixed number of significant digits.
std::string to_decimal(const Rational& q, int significant_digits = 12);

/// C(n, r); zero when r < 0 or r > n.
Integer binomial(long n, long r);

Rational pow(const Rational& base, unsigned long exponent);

inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace hcv
