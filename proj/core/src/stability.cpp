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

#include "heg/stability.hpp"

#include <string>
#include <vector>

#include "heg/enumerate.hpp"
#include "heg/errors.hpp"

namespace heg {

std::string_view to_string(Property p) {
  switch (p) {
    case Property::NS: return "NS";
    case Property::CIS: return "CIS";
    case Property::CS: return "CS";
    case Property::ApproxCS: return "ApproxCS";
    case Property::Perfect: return "Perfect";
    case Property::SO: return "SO";
    case Property::PO: return "PO";
  }
  return "?";
}

namespace {

void require_feasible(const HgcrpInstance& g, const Partition& p) {
  if (p.num_agents() != g.num_agents()) {
    throw InvalidPartition("partition covers " +
                           std::to_string(p.num_agents()) +
                           " agents, game has " +
                           std::to_string(g.num_agents()));
  }
  for (const Coalition& c : p.coalitions()) {
    if (c.size() > g.kappa()) {
      throw InvalidPartition("coalition exceeds kappa " +
                             std::to_string(g.kappa()));
    }
  }
}

void require_subset_budget(const HgcrpInstance& g, const Limits& limits) {
  const std::uint64_t candidates = count_subsets(g.num_agents(), g.kappa());
  if (candidates > limits.subset_budget) {
    throw CapabilityError("subset scan needs " + std::to_string(candidates) +
                          " coalitions, budget is " +
                          std::to_string(limits.subset_budget));
  }
}

void require_partition_limit(const HgcrpInstance& g, const Limits& limits) {
  if (g.num_agents() > limits.partition_limit) {
    throw CapabilityError("partition scan is limited to " +
                          std::to_string(limits.partition_limit) + " agents");
  }
}

std::vector<double> coalition_utilities(const HgcrpInstance& g,
                                        const Partition& p) {
  std::vector<double> u;
  u.reserve(static_cast<std::size_t>(p.size()));
  for (const Coalition& c : p.coalitions()) u.push_back(g.utility(c));
  return u;
}

std::vector<double> agent_utilities(const HgcrpInstance& g,
                                    const Partition& p) {
  std::vector<double> u(static_cast<std::size_t>(p.num_agents()));
  for (const Coalition& c : p.coalitions()) {
    const double v = g.utility(c);
    for (AgentIndex i : c) u[i] = v;
  }
  return u;
}

StabilityReport fails(Property property, Witness w, double alpha = 1.0) {
  return StabilityReport{property, alpha, false, std::move(w)};
}

StabilityReport holds(Property property, double alpha = 1.0) {
  return StabilityReport{property, alpha, true, std::nullopt};
}

double blocking_epsilon(const HgcrpInstance& g, double alpha) {
  return alpha == 1.0 ? g.epsilon() : g.float_epsilon();
}

// Moves to an empty coalition only matter when U is not known to be
// monotone.
bool consider_empty_target(const HgcrpInstance& g) {
  return g.monotone() != std::optional<bool>(true);
}

// Individual deviation scan shared by NS and CIS.
template <typename Violates>
std::optional<Witness> find_individual_deviation(const HgcrpInstance& g,
                                                 const Partition& p,
                                                 Violates&& violates) {
  const std::vector<double> cu = coalition_utilities(g, p);
  const bool empty_target = consider_empty_target(g);
  for (AgentIndex i = 0; i < p.num_agents(); ++i) {
    const int own = p.index_of(i);
    const Coalition& source = p.coalitions()[own];
    for (int k = 0; k < p.size(); ++k) {
      const Coalition& target = p.coalitions()[k];
      if (k == own || target.size() >= g.kappa()) continue;
      const double joined = g.utility(target.with(i));
      if (violates(i, source, cu[own], cu[k], joined)) {
        return Witness{i, target, std::nullopt};
      }
    }
    if (empty_target && source.size() > 1) {
      const double alone = g.utility(Coalition{i});
      if (violates(i, source, cu[own], 0.0, alone)) {
        return Witness{i, Coalition{}, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

StabilityReport is_nash_stable(const HgcrpInstance& g, const Partition& p) {
  require_feasible(g, p);
  const double eps = g.epsilon();
  auto w = find_individual_deviation(
      g, p,
      [&](AgentIndex, const Coalition&, double own, double, double joined) {
        return strictly_greater(joined, own, eps);
      });
  return w ? fails(Property::NS, std::move(*w)) : holds(Property::NS);
}

StabilityReport is_cis(const HgcrpInstance& g, const Partition& p) {
  require_feasible(g, p);
  const double eps = g.epsilon();
  auto w = find_individual_deviation(
      g, p,
      [&](AgentIndex i, const Coalition& source, double own, double target,
          double joined) {
        if (!strictly_greater(joined, own, eps)) return false;
        if (strictly_greater(target, joined, eps)) return false;
        const double left_behind = g.utility(source.without(i));
        return !strictly_greater(own, left_behind, eps);
      });
  return w ? fails(Property::CIS, std::move(*w)) : holds(Property::CIS);
}

bool alpha_blocks(const HgcrpInstance& g, const Coalition& c,
                  const Partition& p, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1]");
  }
  if (c.empty() || c.size() > g.kappa()) {
    throw InvalidArgument("candidate coalition must have 1..kappa members");
  }
  require_feasible(g, p);
  const double eps = blocking_epsilon(g, alpha);
  const double challenge = alpha * g.utility(c);
  for (AgentIndex i : c) {
    if (!strictly_greater(challenge, g.utility(p.coalition_of(i)), eps)) {
      return false;
    }
  }
  return true;
}

bool blocks(const HgcrpInstance& g, const Coalition& c, const Partition& p) {
  return alpha_blocks(g, c, p, 1.0);
}

StabilityReport is_alpha_core_stable(const HgcrpInstance& g,
                                     const Partition& p, double alpha,
                                     const Limits& limits) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1]");
  }
  require_feasible(g, p);
  require_subset_budget(g, limits);
  const Property property = alpha == 1.0 ? Property::CS : Property::ApproxCS;
  const std::vector<double> u = agent_utilities(g, p);
  const double eps = blocking_epsilon(g, alpha);
  std::vector<AgentIndex> everyone(static_cast<std::size_t>(g.num_agents()));
  for (AgentIndex i = 0; i < g.num_agents(); ++i) everyone[i] = i;

  auto blocking = find_first_subset(
      everyone, g.kappa(),
      [&](std::span<const AgentIndex> c) {
        const double challenge = alpha * g.utility(c);
        for (AgentIndex i : c) {
          if (!strictly_greater(challenge, u[i], eps)) return false;
        }
        return true;
      },
      oracle_threads());
  if (blocking) {
    return fails(property, Witness{std::nullopt, Coalition(*blocking),
                                   std::nullopt},
                 alpha);
  }
  return holds(property, alpha);
}

StabilityReport is_core_stable(const HgcrpInstance& g, const Partition& p,
                               const Limits& limits) {
  return is_alpha_core_stable(g, p, 1.0, limits);
}

StabilityReport is_perfect(const HgcrpInstance& g, const Partition& p,
                           const Limits& limits) {
  require_feasible(g, p);
  require_subset_budget(g, limits);
  const int n = g.num_agents();
  std::vector<double> best(static_cast<std::size_t>(n), -1.0);
  std::vector<std::vector<AgentIndex>> best_coalition(
      static_cast<std::size_t>(n));
  std::vector<AgentIndex> everyone(static_cast<std::size_t>(n));
  for (AgentIndex i = 0; i < n; ++i) everyone[i] = i;
  for_each_subset(everyone, g.kappa(), [&](std::span<const AgentIndex> c) {
    const double v = g.utility(c);
    for (AgentIndex i : c) {
      if (v > best[i]) {
        best[i] = v;
        best_coalition[i].assign(c.begin(), c.end());
      }
    }
    return false;
  });
  const std::vector<double> u = agent_utilities(g, p);
  const double eps = g.epsilon();
  for (AgentIndex i = 0; i < n; ++i) {
    if (strictly_greater(best[i], u[i], eps)) {
      return fails(Property::Perfect,
                   Witness{i, Coalition(best_coalition[i]), std::nullopt});
    }
  }
  return holds(Property::Perfect);
}

double social_welfare(const HgcrpInstance& g, const Partition& p) {
  require_feasible(g, p);
  double w = 0;
  for (const Coalition& c : p.coalitions()) w += c.size() * g.utility(c);
  return w;
}

StabilityReport is_socially_optimal(const HgcrpInstance& g,
                                    const Partition& p, const Limits& limits) {
  require_feasible(g, p);
  require_partition_limit(g, limits);
  const double current = social_welfare(g, p);
  const double eps = g.epsilon();
  std::optional<Partition> better;
  for_each_partition(g.num_agents(), g.kappa(), [&](const Partition& q) {
    if (strictly_greater(social_welfare(g, q), current, eps)) {
      better = q;
      return true;
    }
    return false;
  });
  if (better) {
    return fails(Property::SO, Witness{std::nullopt, std::nullopt, *better});
  }
  return holds(Property::SO);
}

bool pareto_dominates(const HgcrpInstance& g, const Partition& p1,
                      const Partition& p2) {
  require_feasible(g, p1);
  require_feasible(g, p2);
  const std::vector<double> u1 = agent_utilities(g, p1);
  const std::vector<double> u2 = agent_utilities(g, p2);
  const double eps = g.epsilon();
  bool strict = false;
  for (std::size_t i = 0; i < u1.size(); ++i) {
    if (strictly_greater(u2[i], u1[i], eps)) return false;
    strict = strict || strictly_greater(u1[i], u2[i], eps);
  }
  return strict;
}

StabilityReport is_pareto_optimal(const HgcrpInstance& g, const Partition& p,
                                  const Limits& limits) {
  require_feasible(g, p);
  require_partition_limit(g, limits);
  const std::vector<double> base = agent_utilities(g, p);
  const double eps = g.epsilon();
  std::optional<Partition> dominating;
  for_each_partition(g.num_agents(), g.kappa(), [&](const Partition& q) {
    const std::vector<double> u = agent_utilities(g, q);
    bool strict = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (strictly_greater(base[i], u[i], eps)) return false;
      strict = strict || strictly_greater(u[i], base[i], eps);
    }
    if (strict) dominating = q;
    return strict;
  });
  if (dominating) {
    return fails(Property::PO,
                 Witness{std::nullopt, std::nullopt, *dominating});
  }
  return holds(Property::PO);
}

bool witness_is_valid(const HgcrpInstance& g, const Partition& p,
                      const StabilityReport& report) {
  if (report.holds) return !report.witness.has_value();
  if (!report.witness) return false;
  const Witness& w = *report.witness;
  const double eps = g.epsilon();
  switch (report.property) {
    case Property::NS:
    case Property::CIS: {
      if (!w.agent || !w.coalition) return false;
      const AgentIndex i = *w.agent;
      const Coalition& target = *w.coalition;
      const Coalition& source = p.coalition_of(i);
      if (target.contains(i)) return false;
      if (!target.empty()) {
        if (target.size() >= g.kappa()) return false;
        if (p.coalition_of(target.front()) != target) return false;
      }
      const double own = g.utility(source);
      const double joined = g.utility(target.with(i));
      if (!strictly_greater(joined, own, eps)) return false;
      if (report.property == Property::NS) return true;
      return !strictly_greater(g.utility(target), joined, eps) &&
             !strictly_greater(own, g.utility(source.without(i)), eps);
    }
    case Property::CS:
    case Property::ApproxCS:
      return w.coalition && alpha_blocks(g, *w.coalition, p, report.alpha);
    case Property::Perfect:
      return w.agent && w.coalition && w.coalition->contains(*w.agent) &&
             w.coalition->size() <= g.kappa() &&
             strictly_greater(g.utility(*w.coalition),
                              g.utility(p.coalition_of(*w.agent)), eps);
    case Property::SO:
      return w.partition && strictly_greater(social_welfare(g, *w.partition),
                                             social_welfare(g, p), eps);
    case Property::PO:
      return w.partition && pareto_dominates(g, *w.partition, p);
  }
  return false;
}

}  // namespace heg
