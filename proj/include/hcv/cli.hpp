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

#include <iosfwd>
#include <string>
#include <vector>

namespace hcv::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kGated = 3;

/// Runs one command line (without the program name). Distribution input is
/// read from `in` when --dist is absent or "-"; reports go to `out`, structured
/// error reports to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hcv::cli
