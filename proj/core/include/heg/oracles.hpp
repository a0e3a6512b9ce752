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

#ifndef HEG_ORACLES_HPP
#define HEG_ORACLES_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heg/generators.hpp"
#include "heg/hgcrp.hpp"
#include "heg/instance.hpp"
#include "heg/limits.hpp"

/// Reference computations that share no code with the solver paths they
/// check. Used by the acceptance suite and the tests.
namespace heg::oracle {

/// U(C) accumulated agent by agent into a per-skill maximum.
double scan_joint_utility(const Instance& inst, std::span<const int> members);

/// |union of the chosen sets| (set indices are 0-based).
int coverage(const SetSystem& ss, std::span<const int> chosen);

/// Whether at most `k` sets of the family cover {1..m}.
bool has_set_cover(const SetSystem& ss, int k);

/// Total weight of edges with an endpoint among `vertices`.
double incident_weight(const WeightedGraph& wg,
                       const std::vector<std::string>& vertices);

/// A partition in which every agent attains its best feasible utility, found
/// by scanning all partitions.
std::optional<Partition> find_perfect_partition(const HgcrpInstance& g,
                                                const Limits& limits);

/// Copy of `g` backed by a full utility table (g must be small).
HgcrpInstance tabulate(const HgcrpInstance& g);

}  // namespace heg::oracle

#endif  // HEG_ORACLES_HPP
