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

#include "heg/algorithms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "heg/enumerate.hpp"
#include "heg/errors.hpp"
#include "heg/random.hpp"

namespace heg {
namespace {

void check_agent(const Instance& inst, AgentIndex i) {
  if (i < 0 || i >= inst.num_agents()) {
    throw InvalidReference("agent index " + std::to_string(i) +
                           " out of range");
  }
}

// Chunks in construction order: full chunks first, leftover (if any) last.
std::vector<std::vector<AgentIndex>> block_chunks(const Instance& inst,
                                                  std::uint64_t seed) {
  std::vector<AgentIndex> order = all_agents(inst.num_agents());
  if (seed != 0) {
    Rng rng(seed);
    rng.shuffle(std::span<AgentIndex>(order));
  }
  std::vector<std::vector<AgentIndex>> chunks;
  const std::size_t kappa = static_cast<std::size_t>(inst.kappa());
  for (std::size_t start = 0; start < order.size(); start += kappa) {
    const std::size_t end = std::min(order.size(), start + kappa);
    std::vector<AgentIndex> chunk(order.begin() + start, order.begin() + end);
    std::sort(chunk.begin(), chunk.end());
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

Partition to_partition(const Instance& inst,
                       const std::vector<std::vector<AgentIndex>>& groups) {
  std::vector<Coalition> cs;
  for (const auto& g : groups) {
    if (!g.empty()) cs.emplace_back(g);
  }
  return Partition(std::move(cs), inst.num_agents(), inst.kappa());
}

PotentialVector groups_psi(const Instance& inst,
                           const std::vector<std::vector<AgentIndex>>& groups) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(inst.num_agents()));
  for (const auto& g : groups) {
    if (g.empty()) continue;
    values.insert(values.end(), g.size(), joint_utility(inst, g));
  }
  return PotentialVector(std::move(values));
}

void insert_sorted(std::vector<AgentIndex>& v, AgentIndex i) {
  v.insert(std::upper_bound(v.begin(), v.end(), i), i);
}

void erase_value(std::vector<AgentIndex>& v, AgentIndex i) {
  v.erase(std::find(v.begin(), v.end(), i));
}

double utility_with(const Instance& inst, std::vector<AgentIndex> members,
                    AgentIndex extra) {
  members.push_back(extra);
  return joint_utility(inst, members);
}

}  // namespace

std::vector<AgentIndex> all_agents(int n) {
  std::vector<AgentIndex> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

Partition initial_block_partition(const Instance& inst, std::uint64_t seed) {
  return to_partition(inst, block_chunks(inst, seed));
}

std::optional<std::uint64_t> brd_move_bound(const Instance& inst) {
  if (!inst.level_bound()) return std::nullopt;
  const std::uint64_t n = static_cast<std::uint64_t>(inst.num_agents());
  const std::uint64_t kappa = static_cast<std::uint64_t>(inst.kappa());
  return static_cast<std::uint64_t>(*inst.level_bound()) *
         static_cast<std::uint64_t>(inst.num_skills()) * (n / kappa) * kappa;
}

DynamicsResult imitative_brd(const Instance& inst, const Partition& p0,
                             const Limits& limits) {
  const int n = inst.num_agents();
  const int kappa = inst.kappa();
  if (p0.num_agents() != n) {
    throw InvalidArgument("initial partition does not match the instance");
  }
  int short_coalitions = 0;
  for (const Coalition& c : p0.coalitions()) {
    if (c.size() > kappa) throw InvalidArgument("coalition exceeds kappa");
    if (c.size() < kappa) ++short_coalitions;
  }
  if (short_coalitions > 1) {
    throw InvalidArgument(
        "initial partition must have coalitions of size kappa except for at "
        "most one");
  }

  std::vector<std::vector<AgentIndex>> groups;
  std::vector<int> owner(static_cast<std::size_t>(n));
  for (const Coalition& c : p0.coalitions()) {
    for (AgentIndex i : c) owner[i] = static_cast<int>(groups.size());
    groups.emplace_back(c.begin(), c.end());
  }
  std::vector<double> value(groups.size());
  for (std::size_t k = 0; k < groups.size(); ++k) {
    value[k] = joint_utility(inst, groups[k]);
  }

  const double eps = inst.epsilon();
  DynamicsResult result{p0, MoveTrace{}};
  result.trace.move_bound = brd_move_bound(inst);

  struct LastMove {
    int source;
    int target;
  };
  std::optional<LastMove> last;

  auto move = [&](StepKind kind, AgentIndex i, int target, double joined) {
    const int source = owner[i];
    MoveStep step;
    step.kind = kind;
    step.agent = i;
    step.from = Coalition(groups[source]);
    step.utility_before = value[source];
    step.utility_after = joined;
    erase_value(groups[source], i);
    insert_sorted(groups[target], i);
    owner[i] = target;
    value[source] = joint_utility(inst, groups[source]);
    value[target] = joined;
    step.to = Coalition(groups[target]);
    step.psi_after = groups_psi(inst, groups);
    result.trace.steps.push_back(std::move(step));
    last = LastMove{source, target};
  };

  for (;;) {
    bool moved = false;
    if (last && static_cast<int>(groups[last->target].size()) < kappa) {
      for (AgentIndex mate : groups[last->source]) {
        const double joined = utility_with(inst, groups[last->target], mate);
        if (strictly_greater(joined, value[last->source], eps)) {
          move(StepKind::Imitation, mate, last->target, joined);
          moved = true;
          break;
        }
      }
    }
    if (!moved) {
      // Targets in canonical order: non-empty groups by smallest member.
      std::vector<int> targets;
      for (std::size_t k = 0; k < groups.size(); ++k) {
        if (!groups[k].empty()) targets.push_back(static_cast<int>(k));
      }
      std::sort(targets.begin(), targets.end(), [&](int a, int b) {
        return groups[a].front() < groups[b].front();
      });
      for (AgentIndex i = 0; i < n && !moved; ++i) {
        for (int k : targets) {
          if (k == owner[i] || static_cast<int>(groups[k].size()) >= kappa) {
            continue;
          }
          const double joined = utility_with(inst, groups[k], i);
          if (strictly_greater(joined, value[owner[i]], eps)) {
            move(StepKind::BetterResponse, i, k, joined);
            moved = true;
            break;
          }
        }
      }
    }
    if (!moved) break;
    if (!result.trace.move_bound &&
        result.trace.steps.size() >= limits.step_cap) {
      throw CapabilityError("better-response dynamics exceeded the step cap of " +
                            std::to_string(limits.step_cap));
    }
  }
  result.partition = to_partition(inst, groups);
  return result;
}

DynamicsResult imitative_brd(const Instance& inst, std::uint64_t seed,
                             const Limits& limits) {
  DynamicsResult r =
      imitative_brd(inst, initial_block_partition(inst, seed), limits);
  r.trace.seed = seed;
  return r;
}

bool is_critical(const Instance& inst, AgentIndex i, const Coalition& c) {
  check_agent(inst, i);
  for (AgentIndex j : c) check_agent(inst, j);
  for (SkillIndex s = 0; s < inst.num_skills(); ++s) {
    double others = 0;
    for (AgentIndex j : c) {
      if (j != i) others = std::max(others, inst.expertise(j, s));
    }
    if (inst.expertise(i, s) > others) return true;
  }
  return false;
}

int critical_count(const Instance& inst, const Coalition& c) {
  int count = 0;
  for (AgentIndex i : c) count += is_critical(inst, i, c) ? 1 : 0;
  return count;
}

std::uint64_t cis_swap_bound(const Instance& inst) {
  const std::uint64_t n = static_cast<std::uint64_t>(inst.num_agents());
  return n / static_cast<std::uint64_t>(inst.kappa()) * n;
}

DynamicsResult cis_algorithm(const Instance& inst, std::uint64_t seed,
                             const Limits& limits) {
  std::vector<std::vector<AgentIndex>> slots = block_chunks(inst, seed);
  DynamicsResult result{to_partition(inst, slots), MoveTrace{}};
  result.trace.seed = seed;
  result.trace.move_bound = cis_swap_bound(inst);
  if (slots.empty() ||
      static_cast<int>(slots.back().size()) == inst.kappa()) {
    return result;  // kappa divides n: no leftover coalition
  }
  std::vector<AgentIndex> leftover = std::move(slots.back());
  slots.pop_back();
  if (slots.empty()) return result;  // n < kappa

  const double eps = inst.epsilon();
  auto snapshot = [&] {
    std::vector<std::vector<AgentIndex>> all = slots;
    all.push_back(leftover);
    return all;
  };

  for (;;) {
    bool swapped = false;
    for (std::size_t k = 0; k < slots.size() && !swapped; ++k) {
      std::vector<AgentIndex>& slot = slots[k];
      const double slot_value = joint_utility(inst, slot);
      for (AgentIndex j : slot) {
        const Coalition current(slot);
        const bool non_critical = !strictly_greater(
            slot_value, joint_utility(inst, current.without(j)), eps);
        if (!non_critical) continue;
        if (!strictly_greater(utility_with(inst, leftover, j), slot_value,
                              eps)) {
          continue;
        }
        auto partner = std::find_if(
            leftover.begin(), leftover.end(),
            [&](AgentIndex x) { return is_critical(inst, x, current); });
        if (partner == leftover.end()) {
          throw std::logic_error("no critical agent in the leftover coalition");
        }
        const AgentIndex jp = *partner;
        MoveStep step;
        step.kind = StepKind::CisSwap;
        step.agent = j;
        step.partner = jp;
        step.slot = static_cast<int>(k);
        step.from = current;
        step.utility_before = slot_value;
        step.gamma_before = critical_count(inst, current);
        erase_value(slot, j);
        insert_sorted(slot, jp);
        erase_value(leftover, jp);
        insert_sorted(leftover, j);
        step.to = Coalition(slot);
        step.utility_after = joint_utility(inst, slot);
        step.gamma_after = critical_count(inst, step.to);
        step.psi_after = groups_psi(inst, snapshot());
        result.trace.steps.push_back(std::move(step));
        swapped = true;
        break;
      }
    }
    if (!swapped) break;
    if (result.trace.steps.size() > limits.step_cap) {
      throw CapabilityError("CIS construction exceeded the step cap of " +
                            std::to_string(limits.step_cap));
    }
  }
  result.partition = to_partition(inst, snapshot());
  return result;
}

namespace {

std::vector<AgentIndex> normalized_pool(const Instance& inst,
                                        std::span<const AgentIndex> pool) {
  if (pool.empty()) throw InvalidArgument("agent pool is empty");
  std::vector<AgentIndex> sorted(pool.begin(), pool.end());
  for (AgentIndex i : sorted) check_agent(inst, i);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("agent pool lists an agent twice");
  }
  return sorted;
}

}  // namespace

Coalition greedy_max_joint_utility(const Instance& inst,
                                   std::span<const AgentIndex> pool) {
  std::vector<AgentIndex> remaining = normalized_pool(inst, pool);
  const std::size_t target =
      std::min(static_cast<std::size_t>(inst.kappa()), remaining.size());
  std::vector<double> covered(static_cast<std::size_t>(inst.num_skills()), 0.0);
  std::vector<AgentIndex> chosen;
  while (chosen.size() < target) {
    std::size_t best = 0;
    double best_gain = -1;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      const auto row = inst.row(remaining[k]);
      double gain = 0;
      for (std::size_t s = 0; s < row.size(); ++s) {
        gain += std::max(row[s] - covered[s], 0.0);
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = k;
      }
    }
    const auto row = inst.row(remaining[best]);
    for (std::size_t s = 0; s < row.size(); ++s) {
      covered[s] = std::max(covered[s], row[s]);
    }
    chosen.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return Coalition(std::move(chosen));
}

Coalition brute_force_max_joint_utility(const Instance& inst,
                                        std::span<const AgentIndex> pool,
                                        const Limits& limits) {
  const std::vector<AgentIndex> sorted = normalized_pool(inst, pool);
  const std::uint64_t candidates =
      count_subsets(static_cast<int>(sorted.size()), inst.kappa());
  if (candidates > limits.subset_budget) {
    throw CapabilityError("maximum joint utility enumeration needs " +
                          std::to_string(candidates) +
                          " coalitions, budget is " +
                          std::to_string(limits.subset_budget));
  }
  return Coalition(best_subset(
      sorted, inst.kappa(),
      [&](std::span<const AgentIndex> c) { return joint_utility(inst, c); },
      oracle_threads()));
}

std::vector<Coalition> greedy_core_sequence(const Instance& inst) {
  std::vector<AgentIndex> remaining = all_agents(inst.num_agents());
  std::vector<Coalition> sequence;
  while (!remaining.empty()) {
    Coalition c = greedy_max_joint_utility(inst, remaining);
    std::erase_if(remaining, [&](AgentIndex i) { return c.contains(i); });
    sequence.push_back(std::move(c));
  }
  return sequence;
}

Partition greedy_core_partition(const Instance& inst) {
  return Partition(greedy_core_sequence(inst), inst.num_agents(),
                   inst.kappa());
}

}  // namespace heg
