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

namespace hcv {

/// Size caps for dense enumeration. Read once from the environment:
///   HCV_MAX_DIM       largest dimension a Distribution may have (default 16)
///   HCV_MAX_PAIR_DIM  largest dimension for exhaustive pair scans (default 12)
struct Limits {
  int max_dimension = 16;
  int max_pair_scan_dimension = 12;

  static Limits from_env();
};

const Limits& default_limits();

}  // namespace hcv
