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

#ifndef HEG_ENUMERATE_HPP
#define HEG_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "heg/partition.hpp"

namespace heg {

// Canonical subset order: increasing size, then lexicographic on the
// (sorted) positions within the pool. Canonical partition order: the order
// of restricted growth strings over agents 0..n-1.

/// Number of subsets of an n-set with 1..max_size elements, saturating at
/// UINT64_MAX.
std::uint64_t count_subsets(int n, int max_size);

/// Number of partitions of an n-set into blocks of size <= kappa.
std::uint64_t count_partitions(int n, int kappa);

using SubsetPredicate = std::function<bool(std::span<const AgentIndex>)>;
using SubsetValue = std::function<double(std::span<const AgentIndex>)>;

/// Visits subsets of `pool` with 1..max_size members in canonical order until
/// `visit` returns true. Returns whether it stopped early.
bool for_each_subset(std::span<const AgentIndex> pool, int max_size,
                     const SubsetPredicate& visit);

/// First subset in canonical order satisfying `pred`. Runs on up to
/// `threads` worker threads; the answer does not depend on the schedule.
std::optional<std::vector<AgentIndex>> find_first_subset(
    std::span<const AgentIndex> pool, int max_size, const SubsetPredicate& pred,
    int threads = 1);

/// Subset maximizing `value`; ties go to the canonically-first subset.
std::vector<AgentIndex> best_subset(std::span<const AgentIndex> pool,
                                    int max_size, const SubsetValue& value,
                                    int threads = 1);

/// Visits every partition of agents 0..n-1 with blocks of size <= kappa, in
/// canonical order, until `visit` returns true.
bool for_each_partition(int n, int kappa,
                        const std::function<bool(const Partition&)>& visit);

/// Worker count for parallel oracles: HEG_THREADS if set and positive,
/// otherwise the hardware concurrency.
int oracle_threads();

}  // namespace heg

#endif  // HEG_ENUMERATE_HPP
