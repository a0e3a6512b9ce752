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

#ifndef HEG_PARTITION_HPP
#define HEG_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace heg {

/// Position of an agent in its instance's agent list.
using AgentIndex = int;

/// A set of agents, kept sorted by agent index. May be empty when used as a
/// scratch set (e.g. `C \ {i}`); coalitions stored in a Partition never are.
class Coalition {
 public:
  Coalition() = default;
  /// Sorts the members; duplicate or negative indices throw InvalidArgument.
  explicit Coalition(std::vector<AgentIndex> members);
  Coalition(std::initializer_list<AgentIndex> members)
      : Coalition(std::vector<AgentIndex>(members)) {}

  static Coalition from_mask(std::uint64_t mask);

  std::span<const AgentIndex> members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(AgentIndex i) const;
  AgentIndex front() const { return members_.front(); }

  Coalition with(AgentIndex i) const;
  Coalition without(AgentIndex i) const;
  /// Bit i set for every member; requires all members < 64.
  std::uint64_t mask() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  std::vector<AgentIndex> members_;
};

/// Disjoint coalitions covering agents 0..n-1, each of size at most kappa,
/// stored in canonical order (by smallest member).
class Partition {
 public:
  /// Throws InvalidPartition on empty, overlapping, oversized or missing
  /// coalitions.
  Partition(std::vector<Coalition> coalitions, int num_agents, int kappa);

  static Partition singletons(int num_agents);
  static Partition grand(int num_agents);

  std::span<const Coalition> coalitions() const { return coalitions_; }
  int size() const { return static_cast<int>(coalitions_.size()); }
  int num_agents() const { return static_cast<int>(owner_.size()); }
  int kappa() const { return kappa_; }

  /// pi(i).
  const Coalition& coalition_of(AgentIndex i) const;
  /// Position of pi(i) in coalitions().
  int index_of(AgentIndex i) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.coalitions_ == b.coalitions_;
  }

 private:
  std::vector<Coalition> coalitions_;
  std::vector<int> owner_;
  int kappa_ = 1;
};

}  // namespace heg

#endif  // HEG_PARTITION_HPP
