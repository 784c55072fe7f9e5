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

#include "hcv/error.hpp"

namespace hcv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::ComputationGated: return "ComputationGated";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::ZeroTotal: return "ZeroTotal";
    case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::BalancedCoordinate: return "BalancedCoordinate";
    case ErrorCode::BadRadius: return "BadRadius";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BadDimensionParity: return "BadDimensionParity";
    case ErrorCode::EpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::MajorityNotAtZero: return "MajorityNotAtZero";
    case ErrorCode::BadStepLimit: return "BadStepLimit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

}  // namespace hcv
