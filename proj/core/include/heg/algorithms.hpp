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

#ifndef HEG_ALGORITHMS_HPP
#define HEG_ALGORITHMS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "heg/hgcrp.hpp"
#include "heg/instance.hpp"
#include "heg/limits.hpp"
#include "heg/partition.hpp"

namespace heg {

enum class StepKind { BetterResponse, Imitation, CisSwap };

/// One deviation. For BetterResponse/Imitation steps `from` is the mover's
/// coalition before the move and `to` the coalition it joined (mover
/// included); utilities are the mover's. For CisSwap steps `agent` (j) is
/// swapped out of slot `slot` for `partner` (j'); `from`/`to` are the slot
/// before/after and the utilities are the slot's joint utility.
struct MoveStep {
  StepKind kind = StepKind::BetterResponse;
  AgentIndex agent = 0;
  Coalition from;
  Coalition to;
  double utility_before = 0;
  double utility_after = 0;
  PotentialVector psi_after;
  std::optional<AgentIndex> partner;
  std::optional<int> slot;
  std::optional<int> gamma_before;
  std::optional<int> gamma_after;
};

struct MoveTrace {
  std::vector<MoveStep> steps;
  std::uint64_t seed = 0;
  /// Guaranteed bound on steps.size(), when one applies.
  std::optional<std::uint64_t> move_bound;
};

struct DynamicsResult {
  Partition partition;
  MoveTrace trace;
};

/// Agents shuffled by `seed` (0 keeps instance order) and chunked into
/// floor(n / kappa) coalitions of size kappa plus a leftover coalition.
Partition initial_block_partition(const Instance& inst, std::uint64_t seed);

/// beta * |S| * floor(n / kappa) * kappa for integral instances.
std::optional<std::uint64_t> brd_move_bound(const Instance& inst);

/// Imitative better-response dynamics from a block partition: while the last
/// mover's target is still below kappa, the canonically-first former
/// coalition-mate who benefits repeats the move; otherwise the
/// canonically-first agent with a better response takes it (first target in
/// canonical order). Stops at a Nash stable partition.
///
/// Throws InvalidArgument when `p0` is not a block partition, and
/// CapabilityError when a real-valued run exceeds limits.step_cap.
DynamicsResult imitative_brd(const Instance& inst, const Partition& p0,
                             const Limits& limits = {});
DynamicsResult imitative_brd(const Instance& inst, std::uint64_t seed,
                             const Limits& limits = {});

/// Agent i is critical for c when e_i(s) > E_{c \ {i}}(s) for some skill.
bool is_critical(const Instance& inst, AgentIndex i, const Coalition& c);
/// gamma(C): number of members of c that are critical for c.
int critical_count(const Instance& inst, const Coalition& c);

/// floor(n / kappa) * n.
std::uint64_t cis_swap_bound(const Instance& inst);

/// Contractually individually stable partition by critical-agent swaps
/// between the full coalitions and the leftover coalition.
DynamicsResult cis_algorithm(const Instance& inst, std::uint64_t seed,
                             const Limits& limits = {});

/// Standard greedy for max U(C) s.t. |C| <= kappa over `pool`: add the agent
/// with the largest marginal gain (ties to the smallest index) until
/// min(kappa, |pool|) members.
Coalition greedy_max_joint_utility(const Instance& inst,
                                   std::span<const AgentIndex> pool);

/// Exact maximum by enumeration; ties to the canonically-first coalition.
Coalition brute_force_max_joint_utility(const Instance& inst,
                                        std::span<const AgentIndex> pool,
                                        const Limits& limits = {});

/// Coalitions in extraction order: greedy coalition over the remaining
/// agents, repeated until everyone is placed.
std::vector<Coalition> greedy_core_sequence(const Instance& inst);
/// (1 - 1/e)-approximate core stable partition.
Partition greedy_core_partition(const Instance& inst);

std::vector<AgentIndex> all_agents(int n);

}  // namespace heg

#endif  // HEG_ALGORITHMS_HPP
