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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcv {

enum class ErrorCode {
  InvalidDimension,
  DimensionTooLarge,
  ComputationGated,
  NegativeWeight,
  DuplicateVertex,
  VertexOutOfRange,
  SumNotOne,
  ZeroTotal,
  ProbabilityOutOfRange,
  ParameterOutOfRange,
  CoordinateOutOfRange,
  BadM,
  EmptySet,
  BalancedCoordinate,
  BadRadius,
  EqualPoints,
  BadParameters,
  BadDimensionParity,
  EpsOutOfRange,
  MajorityNotAtZero,
  BadStepLimit,
  ParseError,
  UnknownName,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  ErrorCode code() const noexcept { return code_; }

  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

  /// True for failures caused by a size cap rather than bad input.
  bool is_gated() const noexcept {
    return code_ == ErrorCode::DimensionTooLarge || code_ == ErrorCode::ComputationGated;
  }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace hcv
