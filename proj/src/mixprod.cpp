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

#include "hcv/mixprod.hpp"

#include <string>

#include "hcv/error.hpp"

namespace hcv {

namespace {

void check_probability(const Rational& p) {
  if (p <= 0 || p >= 1) throw Error(ErrorCode::ProbabilityOutOfRange, "p = " + to_string(p) + " not in (0, 1)");
}

void check_k(int k) {
  if (k < 0) throw Error(ErrorCode::BadParameters, "k must be nonnegative");
}

}  // namespace

void MixParams::validate() const {
  const Rational half(1, 2);
  if (!(alpha > 0 && alpha < 1) || !(p1 > 0 && p1 < half) || !(p2 > half && p2 < 1)) {
    throw Error(ErrorCode::ParameterOutOfRange, "need 0 < alpha < 1 and 0 < p1 < 1/2 < p2 < 1");
  }
}

Rational MixParams::marginal_zero() const { return (1 - alpha) * (1 - p1) + alpha * (1 - p2); }

Rational tail_payoff(const Rational& p, int k) {
  check_probability(p);
  check_k(k);
  const Rational q = 1 - p;
  Rational sum;
  for (int i = k / 2 + 1; i <= k; ++i) {
    sum += Rational(binomial(k, i)) * pow(p, static_cast<unsigned long>(i)) * pow(q, static_cast<unsigned long>(k - i));
  }
  if (k % 2 == 0) {
    sum += Rational(binomial(k, k / 2)) * pow(p * q, static_cast<unsigned long>(k / 2)) / 2;
  }
  return sum;
}

Rational tail_increment(const Rational& p, int k) {
  check_probability(p);
  check_k(k);
  if (k % 2 == 1) return 0;
  const Rational q = 1 - p;
  return Rational(binomial(k, k / 2)) * pow(p * q, static_cast<unsigned long>(k / 2)) * (p - q) / 2;
}

Rational a_of(const MixParams& params, int k) {
  params.validate();
  return (1 - params.alpha) * tail_payoff(params.p1, k) + params.alpha * tail_payoff(params.p2, k);
}

std::vector<Rational> a_sequence(const MixParams& params, int d) {
  params.validate();
  check_k(d);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(d) + 1);
  Rational a(1, 2);
  out.push_back(a);
  for (int k = 0; k < d; ++k) {
    a += (1 - params.alpha) * tail_increment(params.p1, k) + params.alpha * tail_increment(params.p2, k);
    out.push_back(a);
  }
  return out;
}

MixClassification classify(const MixParams& params, int d) {
  params.validate();
  if (d < 1) throw Error(ErrorCode::InvalidDimension, "dimension must be at least 1");
  if (params.marginal_zero() <= Rational(1, 2)) {
    throw Error(ErrorCode::MajorityNotAtZero,
                "w_i^0 = " + to_string(params.marginal_zero()) + " is not above 1/2; swap the roles of 0 and 1");
  }
  MixClassification out;
  out.a_sequence = a_sequence(params, d);
  const Rational& last = out.a_sequence.back();
  if (last > Rational(1, 2)) {
    out.verdict = MixVerdict::AntipodalBestResponse;
    out.argmax_k = d;
  }
  out.tie = last == Rational(1, 2);
  for (std::size_t k = 1; k < out.a_sequence.size(); ++k) {
    if (out.a_sequence[k] > out.a_sequence[k - 1]) {
      out.shape = SequenceShape::DecreasingThenIncreasing;
      break;
    }
  }
  return out;
}

bool asymptotic_antipodal(const MixParams& params) {
  params.validate();
  return params.alpha > Rational(1, 2);
}

}  // namespace hcv
