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

#include "heg/partition.hpp"

#include <algorithm>
#include <string>

#include "heg/errors.hpp"

namespace heg {

Coalition::Coalition(std::vector<AgentIndex> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidArgument("coalition lists an agent twice");
  }
  if (!members_.empty() && members_.front() < 0) {
    throw InvalidArgument("negative agent index");
  }
}

Coalition Coalition::from_mask(std::uint64_t mask) {
  std::vector<AgentIndex> members;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) members.push_back(i);
  }
  Coalition c;
  c.members_ = std::move(members);
  return c;
}

bool Coalition::contains(AgentIndex i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

Coalition Coalition::with(AgentIndex i) const {
  if (contains(i)) throw InvalidArgument("agent already in coalition");
  Coalition c = *this;
  c.members_.insert(std::upper_bound(c.members_.begin(), c.members_.end(), i),
                    i);
  return c;
}

Coalition Coalition::without(AgentIndex i) const {
  Coalition c = *this;
  auto it = std::lower_bound(c.members_.begin(), c.members_.end(), i);
  if (it != c.members_.end() && *it == i) c.members_.erase(it);
  return c;
}

std::uint64_t Coalition::mask() const {
  std::uint64_t m = 0;
  for (AgentIndex i : members_) {
    if (i >= 64) throw InvalidArgument("coalition mask needs agents < 64");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

Partition::Partition(std::vector<Coalition> coalitions, int num_agents,
                     int kappa)
    : coalitions_(std::move(coalitions)),
      owner_(static_cast<std::size_t>(num_agents), -1),
      kappa_(kappa) {
  if (kappa < 1) throw InvalidPartition("kappa must be positive");
  for (const Coalition& c : coalitions_) {
    if (c.empty()) throw InvalidPartition("empty coalition");
  }
  std::sort(coalitions_.begin(), coalitions_.end(),
            [](const Coalition& a, const Coalition& b) {
              return a.front() < b.front();
            });
  for (std::size_t k = 0; k < coalitions_.size(); ++k) {
    const Coalition& c = coalitions_[k];
    if (c.size() > kappa) {
      throw InvalidPartition("coalition of size " + std::to_string(c.size()) +
                             " exceeds kappa " + std::to_string(kappa));
    }
    for (AgentIndex i : c) {
      if (i >= num_agents) throw InvalidPartition("agent index out of range");
      if (owner_[i] != -1) {
        throw InvalidPartition("agent " + std::to_string(i) +
                               " appears in two coalitions");
      }
      owner_[i] = static_cast<int>(k);
    }
  }
  for (int i = 0; i < num_agents; ++i) {
    if (owner_[i] == -1) {
      throw InvalidPartition("agent " + std::to_string(i) +
                             " is not in any coalition");
    }
  }
}

// Sorting by front() is enough for canonical order: the fronts of disjoint
// non-empty coalitions are distinct.

Partition Partition::singletons(int num_agents) {
  std::vector<Coalition> cs;
  cs.reserve(static_cast<std::size_t>(num_agents));
  for (int i = 0; i < num_agents; ++i) cs.push_back(Coalition{i});
  return Partition(std::move(cs), num_agents, 1);
}

Partition Partition::grand(int num_agents) {
  std::vector<AgentIndex> all(static_cast<std::size_t>(num_agents));
  for (int i = 0; i < num_agents; ++i) all[i] = i;
  return Partition({Coalition(std::move(all))}, num_agents,
                   std::max(num_agents, 1));
}

const Coalition& Partition::coalition_of(AgentIndex i) const {
  return coalitions_[index_of(i)];
}

int Partition::index_of(AgentIndex i) const {
  if (i < 0 || i >= num_agents()) {
    throw InvalidPartition("agent " + std::to_string(i) +
                           " is not in the partition");
  }
  return owner_[i];
}

}  // namespace heg
