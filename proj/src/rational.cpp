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

#include "hcv/rational.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

#include "hcv/error.hpp"

namespace hcv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(text);

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer d(std::string(den), 10);
    if (d == 0) bad(text);
    result = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if (!whole.empty() && !all_digits(whole)) bad(text);
    if (!frac.empty() && !all_digits(frac)) bad(text);
    std::string digits = std::string(whole.empty() ? "0" : whole) + std::string(frac);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    result = Rational(Integer(digits, 10), den);
  } else {
    if (!all_digits(s)) bad(text);
    result = Rational(Integer(std::string(s), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int significant_digits) {
  // 4 bits per decimal digit plus slack is plenty for the rounding gmp does.
  mpf_class f(q, static_cast<mp_bitcnt_t>(significant_digits) * 4 + 64);
  int n = gmp_snprintf(nullptr, 0, "%.*Fg", significant_digits, f.get_mpf_t());
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

Integer binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

}  // namespace hcv
