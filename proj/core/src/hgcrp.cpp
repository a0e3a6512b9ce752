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

#include "heg/hgcrp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heg/enumerate.hpp"
#include "heg/errors.hpp"
#include "heg/random.hpp"

namespace heg {

HgcrpInstance HgcrpInstance::from_table(std::vector<std::string> agents,
                                        int kappa, std::vector<double> table) {
  const int n = static_cast<int>(agents.size());
  if (n == 0) throw InvalidArgument("game has no agents");
  if (n > kMaxTableAgents) {
    throw InvalidArgument("utility tables support at most " +
                          std::to_string(kMaxTableAgents) + " agents");
  }
  if (kappa < 1) throw InvalidArgument("kappa must be at least 1");
  if (table.size() != (std::size_t{1} << n)) {
    throw InvalidArgument("utility table must have 2^n entries");
  }
  if (table[0] != 0) throw InvalidArgument("U(empty) must be 0");
  bool integral = true;
  for (double v : table) {
    if (!std::isfinite(v) || v < 0) {
      throw InvalidArgument("utilities must be finite and >= 0");
    }
    integral = integral && v == std::floor(v);
  }
  HgcrpInstance g;
  g.agents_ = std::move(agents);
  for (int i = 0; i < n; ++i) {
    if (!g.lookup_.emplace(g.agents_[i], i).second) {
      throw InvalidArgument("duplicate agent id '" + g.agents_[i] + "'");
    }
  }
  g.kappa_ = kappa;
  g.table_ = std::move(table);
  g.integral_ = integral;
  return g;
}

HgcrpInstance HgcrpInstance::from_oracle(std::vector<std::string> agents,
                                         int kappa, UtilityFn utility,
                                         bool integral) {
  if (agents.empty()) throw InvalidArgument("game has no agents");
  if (kappa < 1) throw InvalidArgument("kappa must be at least 1");
  if (!utility) throw InvalidArgument("missing utility callable");
  HgcrpInstance g;
  g.agents_ = std::move(agents);
  for (int i = 0; i < g.num_agents(); ++i) {
    if (!g.lookup_.emplace(g.agents_[i], i).second) {
      throw InvalidArgument("duplicate agent id '" + g.agents_[i] + "'");
    }
  }
  g.kappa_ = kappa;
  g.utility_ = std::move(utility);
  g.integral_ = integral;
  return g;
}

HgcrpInstance HgcrpInstance::from_heg(const Instance& inst) {
  auto shared = std::make_shared<const Instance>(inst);
  HgcrpInstance g = from_oracle(
      inst.agents(), inst.kappa(),
      [shared](std::span<const AgentIndex> c) {
        return joint_utility(*shared, c);
      },
      inst.integral());
  g.heg_ = std::move(shared);
  g.epsilon_ = inst.epsilon() > 0 ? inst.epsilon() : g.epsilon_;
  g.monotone_ = true;
  g.submodular_ = true;
  return g;
}

AgentIndex HgcrpInstance::agent_index(std::string_view id) const {
  auto it = lookup_.find(std::string(id));
  if (it == lookup_.end()) {
    throw InvalidReference("unknown agent '" + std::string(id) + "'");
  }
  return it->second;
}

double HgcrpInstance::utility(std::span<const AgentIndex> c) const {
  if (c.empty()) return 0;
  if (!table_.empty()) {
    std::uint64_t mask = 0;
    for (AgentIndex i : c) {
      if (i < 0 || i >= num_agents()) {
        throw InvalidReference("agent index " + std::to_string(i) +
                               " out of range");
      }
      mask |= std::uint64_t{1} << i;
    }
    return table_[mask];
  }
  return utility_(c);
}

double HgcrpInstance::utility_of_mask(std::uint64_t mask) const {
  if (!table_.empty()) return table_.at(mask);
  return utility(Coalition::from_mask(mask).members());
}

namespace {

std::vector<double> materialize(const HgcrpInstance& g) {
  if (g.has_table()) return {g.table().begin(), g.table().end()};
  const std::uint64_t size = std::uint64_t{1} << g.num_agents();
  std::vector<double> values(size);
  std::vector<AgentIndex> members;
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    members.clear();
    for (int i = 0; i < g.num_agents(); ++i) {
      if (mask >> i & 1) members.push_back(i);
    }
    values[mask] = g.utility(members);
  }
  return values;
}

}  // namespace

SubmodularityReport check_monotone_submodular(const HgcrpInstance& g,
                                              const Limits& limits) {
  const int n = g.num_agents();
  if (!g.has_table() && n > limits.submodularity_limit) {
    throw CapabilityError(
        "exhaustive monotone/submodular check is limited to " +
        std::to_string(limits.submodularity_limit) +
        " agents for oracle-backed games; use the sampled check");
  }
  const std::vector<double> u = materialize(g);
  const double eps = g.epsilon();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  SubmodularityReport report;
  std::optional<SubmodularityViolation> first_submodular;
  for (std::uint64_t y = 0; y <= full; ++y) {
    // All submasks x of y, including 0 and y itself.
    for (std::uint64_t x = y;; x = (x - 1) & y) {
      if (report.monotone && strictly_greater(u[x], u[y], eps)) {
        report.monotone = false;
        report.counterexample = SubmodularityViolation{
            SubmodularityViolation::Kind::Monotonicity, Coalition::from_mask(x),
            Coalition::from_mask(y), std::nullopt};
      }
      for (int a = 0; a < n; ++a) {
        const std::uint64_t bit = std::uint64_t{1} << a;
        if (y & bit) continue;
        ++report.triples;
        const double gain_small = u[x | bit] - u[x];
        const double gain_large = u[y | bit] - u[y];
        if (report.submodular && strictly_greater(gain_large, gain_small, eps)) {
          report.submodular = false;
          first_submodular = SubmodularityViolation{
              SubmodularityViolation::Kind::Submodularity,
              Coalition::from_mask(x), Coalition::from_mask(y), a};
        }
      }
      if (x == 0) break;
    }
  }
  if (!report.counterexample) report.counterexample = first_submodular;
  return report;
}

SubmodularityReport sample_monotone_submodular(const HgcrpInstance& g,
                                               std::uint64_t triples,
                                               std::uint64_t seed) {
  const int n = g.num_agents();
  const double eps = g.epsilon();
  Rng rng(seed);
  SubmodularityReport report;
  if (n < 2) return report;
  std::vector<AgentIndex> xs, ys;
  for (std::uint64_t t = 0; t < triples; ++t) {
    const AgentIndex added = static_cast<AgentIndex>(rng.below(n));
    xs.clear();
    ys.clear();
    for (AgentIndex i = 0; i < n; ++i) {
      if (i == added || !rng.chance(0.5)) continue;
      ys.push_back(i);
      if (rng.chance(0.5)) xs.push_back(i);
    }
    const Coalition x(xs), y(ys);
    const double ux = g.utility(x), uy = g.utility(y);
    const double gain_small = g.utility(x.with(added)) - ux;
    const double gain_large = g.utility(y.with(added)) - uy;
    ++report.triples;
    if (report.monotone && strictly_greater(ux, uy, eps)) {
      report.monotone = false;
      if (!report.counterexample) {
        report.counterexample = SubmodularityViolation{
            SubmodularityViolation::Kind::Monotonicity, x, y, std::nullopt};
      }
    }
    if (report.submodular && strictly_greater(gain_large, gain_small, eps)) {
      report.submodular = false;
      if (!report.counterexample) {
        report.counterexample = SubmodularityViolation{
            SubmodularityViolation::Kind::Submodularity, x, y, added};
      }
    }
  }
  return report;
}

PotentialVector::PotentialVector(std::vector<double> values)
    : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

LexOrder lex_compare(const PotentialVector& a, const PotentialVector& b,
                     double eps) {
  if (a.size() != b.size()) {
    throw InvalidArgument("potential vectors have different lengths");
  }
  for (int k = 0; k < a.size(); ++k) {
    if (strictly_greater(a.values()[k], b.values()[k], eps)) {
      return LexOrder::Greater;
    }
    if (strictly_greater(b.values()[k], a.values()[k], eps)) {
      return LexOrder::Less;
    }
  }
  return LexOrder::Equal;
}

PotentialVector psi(const HgcrpInstance& g, const Partition& p) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(p.num_agents()));
  for (const Coalition& c : p.coalitions()) {
    values.insert(values.end(), static_cast<std::size_t>(c.size()),
                  g.utility(c));
  }
  return PotentialVector(std::move(values));
}

PotentialVector psi(const Instance& inst, const Partition& p) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(p.num_agents()));
  for (const Coalition& c : p.coalitions()) {
    values.insert(values.end(), static_cast<std::size_t>(c.size()),
                  joint_utility(inst, c));
  }
  return PotentialVector(std::move(values));
}

Partition induced_partition(const Partition& p, const Coalition& c) {
  if (c.empty()) throw InvalidArgument("deviating coalition is empty");
  std::vector<Coalition> next{c};
  for (const Coalition& d : p.coalitions()) {
    std::vector<AgentIndex> rest;
    for (AgentIndex i : d) {
      if (!c.contains(i)) rest.push_back(i);
    }
    if (!rest.empty()) next.emplace_back(std::move(rest));
  }
  return Partition(std::move(next), p.num_agents(), p.kappa());
}

Partition psi_maximal_partition(const HgcrpInstance& g, const Limits& limits) {
  const int n = g.num_agents();
  if (n > limits.partition_limit) {
    throw CapabilityError("psi-maximal search enumerates all partitions and "
                          "is limited to " +
                          std::to_string(limits.partition_limit) + " agents");
  }
  std::optional<Partition> best;
  PotentialVector best_psi;
  const double eps = g.epsilon();
  for_each_partition(n, g.kappa(), [&](const Partition& p) {
    PotentialVector v = psi(g, p);
    if (!best || lex_compare(v, best_psi, eps) == LexOrder::Greater) {
      best = p;
      best_psi = std::move(v);
    }
    return false;
  });
  return *best;
}

}  // namespace heg
