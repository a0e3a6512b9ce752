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

#include "heg/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "heg/enumerate.hpp"
#include "heg/errors.hpp"

namespace heg::oracle {

double scan_joint_utility(const Instance& inst, std::span<const int> members) {
  std::vector<double> best(static_cast<std::size_t>(inst.num_skills()), 0.0);
  for (int i : members) {
    const auto row = inst.row(i);
    for (std::size_t s = 0; s < best.size(); ++s) best[s] = std::max(best[s], row[s]);
  }
  double total = 0;
  for (double b : best) total += b;
  return total;
}

int coverage(const SetSystem& ss, std::span<const int> chosen) {
  std::set<int> covered;
  for (int i : chosen) covered.insert(ss.sets[i].begin(), ss.sets[i].end());
  return static_cast<int>(covered.size());
}

bool has_set_cover(const SetSystem& ss, int k) {
  const int n = static_cast<int>(ss.sets.size());
  const std::uint64_t universe = (std::uint64_t{1} << ss.universe_size) - 1;
  std::vector<std::uint64_t> masks;
  for (const auto& set : ss.sets) {
    std::uint64_t mask = 0;
    for (int e : set) mask |= std::uint64_t{1} << (e - 1);
    masks.push_back(mask);
  }
  if (universe == 0) return true;  // empty universe: the empty cover works
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << n); ++pick) {
    if (std::popcount(pick) > k) continue;
    std::uint64_t covered = 0;
    for (int i = 0; i < n; ++i) {
      if (pick >> i & 1) covered |= masks[i];
    }
    if (covered == universe) return true;
  }
  return false;
}

double incident_weight(const WeightedGraph& wg,
                       const std::vector<std::string>& vertices) {
  const std::set<std::string> chosen(vertices.begin(), vertices.end());
  double total = 0;
  for (const auto& e : wg.edges) {
    if (chosen.count(e.u) || chosen.count(e.v)) total += e.weight;
  }
  return total;
}

std::optional<Partition> find_perfect_partition(const HgcrpInstance& g,
                                                const Limits& limits) {
  const int n = g.num_agents();
  if (n > limits.partition_limit) {
    throw CapabilityError("perfect-partition scan exceeds the partition limit");
  }
  std::vector<double> best(static_cast<std::size_t>(n), 0.0);
  std::vector<int> everyone(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) everyone[i] = i;
  for_each_subset(everyone, g.kappa(), [&](std::span<const int> c) {
    const double v = g.utility(c);
    for (int i : c) best[i] = std::max(best[i], v);
    return false;
  });
  const double eps = g.epsilon();
  std::optional<Partition> found;
  for_each_partition(n, g.kappa(), [&](const Partition& p) {
    for (const Coalition& c : p.coalitions()) {
      const double v = g.utility(c);
      for (int i : c) {
        if (best[i] > v + eps) return false;
      }
    }
    found = p;
    return true;
  });
  return found;
}

HgcrpInstance tabulate(const HgcrpInstance& g) {
  if (g.has_table()) return g;
  const int n = g.num_agents();
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
    table[mask] = g.utility_of_mask(mask);
  }
  HgcrpInstance t = HgcrpInstance::from_table(g.agents(), g.kappa(),
                                              std::move(table));
  t.set_epsilon(g.float_epsilon());
  if (g.monotone() && g.submodular()) {
    t.set_verified(*g.monotone(), *g.submodular());
  }
  return t;
}

}  // namespace heg::oracle
