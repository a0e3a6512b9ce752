// Copyright 2026 The HEG Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEG_LIMITS_HPP
#define HEG_LIMITS_HPP

#include <cstdint>

namespace heg {

/// Budgets for the exhaustive oracles. These are configuration, the defaults
/// are sized for desk-scale verification.
struct Limits {
  /// Maximum number of candidate coalitions a subset scan may visit.
  std::uint64_t subset_budget = 10'000'000;
  /// Maximum number of agents for scans over all partitions.
  int partition_limit = 8;
  /// Maximum number of agents for the exhaustive monotone/submodular check
  /// on oracle-backed games.
  int submodularity_limit = 12;
  /// Absolute tolerance used for strict comparisons on real-valued games.
  double epsilon = 1e-9;
  /// Step cap for better-response dynamics without a move bound.
  std::uint64_t step_cap = 1'000'000;
};

/// 1 - 1/e.
inline constexpr double kGreedyRatio = 0.6321205588285577;

}  // namespace heg

#endif  // HEG_LIMITS_HPP
