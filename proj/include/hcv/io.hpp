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

// Distribution files and report values.
//
// Distribution file (JSON):
//   {
//     "d": 3,
//     "weights": [ {"vertex": "001", "weight": "3/10"}, ... ],
//     "normalize": false            // optional
//   }
// "vertex" is a bitstring of length d whose leftmost character is
// coordinate 1 (bit 0 of the vertex index). "weight" is "a/b", an integer
// or a terminating decimal, parsed exactly. Unlisted vertices weigh 0.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hcv/core.hpp"

namespace hcv::io {

Distribution parse_distribution_json(std::string_view text, const Limits& limits = default_limits());

/// Throws Error(ParseError) if the file cannot be read.
Distribution parse_distribution(const std::filesystem::path& path, const Limits& limits = default_limits());

/// Nonzero weights in ascending vertex order, as exact "a/b" strings.
nlohmann::json distribution_to_json(const Distribution& dist);
std::string export_distribution(const Distribution& dist);

/// {"exact": "3/5", "approx": "0.6"}; only "exact" is authoritative.
nlohmann::json exact_value(const Rational& q);

/// Reads back the "exact" member written by exact_value.
Rational read_exact(const nlohmann::json& value);

/// "sha256:<hex>" of the given bytes.
std::string digest(std::string_view bytes);

}  // namespace hcv::io
