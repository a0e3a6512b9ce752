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

#ifndef HEG_STABILITY_HPP
#define HEG_STABILITY_HPP

#include <optional>
#include <string_view>

#include "heg/hgcrp.hpp"
#include "heg/limits.hpp"
#include "heg/partition.hpp"

namespace heg {

enum class Property { NS, CIS, CS, ApproxCS, Perfect, SO, PO };

std::string_view to_string(Property p);

/// Evidence that a property fails.
///
///   NS, CIS  - `agent` and the coalition it would join (`coalition`, empty
///              for a move to a new coalition).
///   CS       - the blocking `coalition`.
///   Perfect  - an `agent` and a `coalition` it strictly prefers.
///   SO, PO   - a `partition` with higher welfare / that Pareto dominates.
struct Witness {
  std::optional<AgentIndex> agent;
  std::optional<Coalition> coalition;
  std::optional<Partition> partition;
};

struct StabilityReport {
  Property property = Property::NS;
  double alpha = 1.0;  // ApproxCS only
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
};

// All checkers throw InvalidPartition when `p` is not a feasible partition
// of `g`. The exhaustive ones throw CapabilityError past their budget.

StabilityReport is_nash_stable(const HgcrpInstance& g, const Partition& p);
StabilityReport is_cis(const HgcrpInstance& g, const Partition& p);

/// U(C) > u_i(pi) for every member i of c.
bool blocks(const HgcrpInstance& g, const Coalition& c, const Partition& p);
/// alpha * U(C) > u_i(pi) for every member i of c; alpha in (0, 1].
bool alpha_blocks(const HgcrpInstance& g, const Coalition& c,
                  const Partition& p, double alpha);

StabilityReport is_core_stable(const HgcrpInstance& g, const Partition& p,
                               const Limits& limits = {});
StabilityReport is_alpha_core_stable(const HgcrpInstance& g,
                                     const Partition& p, double alpha,
                                     const Limits& limits = {});

StabilityReport is_perfect(const HgcrpInstance& g, const Partition& p,
                           const Limits& limits = {});

/// W(pi) = sum over coalitions of |C| * U(C).
double social_welfare(const HgcrpInstance& g, const Partition& p);
StabilityReport is_socially_optimal(const HgcrpInstance& g,
                                    const Partition& p,
                                    const Limits& limits = {});

/// p1 Pareto dominates p2.
bool pareto_dominates(const HgcrpInstance& g, const Partition& p1,
                      const Partition& p2);
StabilityReport is_pareto_optimal(const HgcrpInstance& g, const Partition& p,
                                  const Limits& limits = {});

/// Re-checks a failing report's witness against the definition of its
/// property. True for holding reports without a witness.
bool witness_is_valid(const HgcrpInstance& g, const Partition& p,
                      const StabilityReport& report);

}  // namespace heg

#endif  // HEG_STABILITY_HPP
