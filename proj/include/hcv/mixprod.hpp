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

// Closed-form analysis of two-bloc mixed product measures
//   mu(X) = (1 - alpha) p1^|X| (1-p1)^(d-|X|) + alpha p2^|X| (1-p2)^(d-|X|).
//
// Against the all-zeros candidate, every vertex of layer k earns the same
// payoff a_k, whatever the ambient dimension. a_k is a convex combination of
// binomial upper tails, so the whole analysis runs without building a
// distribution and works far beyond the dense-enumeration cap.

#include <vector>

#include "hcv/rational.hpp"

namespace hcv {

struct MixParams {
  Rational alpha;
  Rational p1;
  Rational p2;

  /// Throws ParameterOutOfRange unless 0 < alpha < 1 and 0 < p1 < 1/2 < p2 < 1.
  void validate() const;

  /// w_i^0 = (1 - alpha)(1 - p1) + alpha (1 - p2), the same on every coordinate.
  Rational marginal_zero() const;
};

/// x_k(p): payoff of 1...1 against 0...0 in Q_k under the product measure
/// with parameter p, i.e. P(Bin(k, p) > k/2) + P(Bin(k, p) = k/2) / 2.
/// Throws ProbabilityOutOfRange unless 0 < p < 1.
Rational tail_payoff(const Rational& p, int k);

/// x_{k+1}(p) - x_k(p) in closed form: 0 for odd k, and
/// C(k, k/2) (p(1-p))^(k/2) (2p - 1) / 2 for even k.
Rational tail_increment(const Rational& p, int k);

/// a_k = (1 - alpha) x_k(p1) + alpha x_k(p2).
Rational a_of(const MixParams& params, int k);

/// a_0 .. a_d, built by accumulating tail increments.
std::vector<Rational> a_sequence(const MixParams& params, int d);

enum class MixVerdict { EquilibriumAtMajority, AntipodalBestResponse };
enum class SequenceShape { Decreasing, DecreasingThenIncreasing };

struct MixClassification {
  MixVerdict verdict = MixVerdict::EquilibriumAtMajority;
  int argmax_k = 0;
  std::vector<Rational> a_sequence;
  SequenceShape shape = SequenceShape::Decreasing;
  /// a_d == 1/2 exactly: both 0...0 and 1...1 are best responses.
  bool tie = false;
};

/// Which of 0...0 and 1...1 is the best response to 0...0 in Q_d. Requires
/// a zero majority (MajorityNotAtZero otherwise).
MixClassification classify(const MixParams& params, int d);

/// Whether the antipodal case holds for all large d: alpha > 1/2.
bool asymptotic_antipodal(const MixParams& params);

}  // namespace hcv
