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

#include "heg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heg/algorithms.hpp"
#include "heg/enumerate.hpp"
#include "heg/errors.hpp"
#include "heg/generators.hpp"
#include "heg/hgcrp.hpp"
#include "heg/instance.hpp"
#include "heg/oracles.hpp"
#include "heg/random.hpp"
#include "heg/stability.hpp"

namespace heg::verify {
namespace {

constexpr double kRealTolerance = 1e-9;

std::uint64_t derive_seed(std::uint64_t base, int criterion, int index) {
  // splitmix64 finaliser over the three inputs.
  std::uint64_t z = base * 0x9e3779b97f4a7c15ULL +
                    (static_cast<std::uint64_t>(criterion) << 32) +
                    static_cast<std::uint64_t>(index) + 1;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Collects failures; the first message is kept for the report.
class Tally {
 public:
  void fail(std::string message) {
    if (failures_++ == 0) first_ = std::move(message);
  }
  void expect(bool ok, const std::string& message) {
    if (!ok) fail(message);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& on_success) const {
    if (ok()) return on_success;
    return std::to_string(failures_) + " failure(s); first: " + first_;
  }

 private:
  int failures_ = 0;
  std::string first_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

bool close(double a, double b, bool exact) {
  return exact ? a == b : std::fabs(a - b) <= kRealTolerance;
}

struct Outcome1 {
  bool pass;
  std::string detail;
};

Outcome1 alice_and_bob(const SuiteConfig&) {
  const Instance inst({"Alice", "Bob"}, {"Python", "Java", "SQL"},
                      {1, 3, 3, 3, 3, 1}, 2);
  const Coalition both{0, 1};
  Tally t;
  const double u = joint_utility(inst, both);
  t.expect(u == 9, "U({Alice,Bob}) = " + fmt(u));
  const std::vector<int> members{0, 1};
  t.expect(oracle::scan_joint_utility(inst, members) == 9,
           "scan oracle disagrees");
  for (const char* skill : {"Python", "Java", "SQL"}) {
    const double e = joint_expertise(inst, both, skill);
    t.expect(e == 3, std::string("E(") + skill + ") = " + fmt(e));
  }
  return {t.ok(), t.summary("U = 9, joint expertise (3, 3, 3)")};
}

Outcome1 utility_submodular(const SuiteConfig& cfg) {
  Tally t;
  int exhaustive = 0;
  int sampled = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(derive_seed(cfg.seed, 2, i));
    const bool small = i < 100;
    RandomParams params;
    params.agents = static_cast<int>(small ? rng.between(1, 6)
                                           : rng.between(7, 20));
    params.skills = static_cast<int>(rng.between(1, 6));
    params.kappa = static_cast<int>(rng.between(1, params.agents));
    if (i % 2 == 0) params.beta = static_cast<int>(rng.between(1, 3));
    params.density = 0.3 + 0.7 * rng.unit();
    params.seed = rng.next();
    const Instance inst = random_instance(params);
    const HgcrpInstance g = HgcrpInstance::from_heg(inst);
    const bool exact = inst.integral();
    const std::string tag = "instance " + std::to_string(i);

    const SubmodularityReport rep =
        small ? check_monotone_submodular(g, cfg.limits)
              : sample_monotone_submodular(g, 10'000, rng.next());
    t.expect(rep.monotone && rep.submodular, tag + " violates the property");

    const int n = inst.num_agents();
    auto check_gain = [&](std::uint64_t mask, int x) {
      const Coalition c = Coalition::from_mask(mask);
      const double gain = marginal_gain(inst, c, x);
      const double diff =
          joint_utility(inst, c.with(x)) - joint_utility(inst, c);
      t.expect(close(gain, diff, exact),
               tag + ": marginal gain " + fmt(gain) + " vs " + fmt(diff));
    };
    if (small) {
      ++exhaustive;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int x = 0; x < n; ++x) {
          if (!(mask >> x & 1)) check_gain(mask, x);
        }
      }
    } else {
      ++sampled;
      for (int s = 0; s < 10'000; ++s) {
        const int x = static_cast<int>(rng.below(n));
        std::uint64_t mask = rng.next() & ((std::uint64_t{1} << n) - 1);
        mask &= ~(std::uint64_t{1} << x);
        check_gain(mask, x);
      }
    }
  }
  return {t.ok(), t.summary(std::to_string(exhaustive) + " exhaustive, " +
                            std::to_string(sampled) +
                            " sampled instances, no violations")};
}

Outcome1 psi_maximal_stable(const SuiteConfig& cfg) {
  Tally t;
  int tables = 0;
  for (int i = 0; i < 50; ++i) {
    Rng rng(derive_seed(cfg.seed, 3, i));
    const int n = static_cast<int>(rng.between(2, 7));
    const int kappa = static_cast<int>(rng.between(1, n));
    std::optional<HgcrpInstance> g;
    if (i % 2 == 0) {
      const auto family = static_cast<TableFamily>((i / 2) % 3);
      g = random_submodular_table(n, kappa, family, rng.next());
      const SubmodularityReport rep = check_monotone_submodular(*g, cfg.limits);
      if (!rep.monotone || !rep.submodular) {
        t.fail("table " + std::to_string(i) + " is not monotone submodular");
        continue;
      }
      ++tables;
    } else {
      RandomParams params;
      params.agents = n;
      params.skills = static_cast<int>(rng.between(1, 5));
      params.kappa = kappa;
      if (i % 4 == 1) params.beta = static_cast<int>(rng.between(1, 3));
      params.density = 0.3 + 0.7 * rng.unit();
      params.seed = rng.next();
      g = HgcrpInstance::from_heg(random_instance(params));
    }
    const Partition p = psi_maximal_partition(*g, cfg.limits);
    const std::string tag = "instance " + std::to_string(i);
    t.expect(is_nash_stable(*g, p).holds, tag + " not NS");
    t.expect(is_core_stable(*g, p, cfg.limits).holds, tag + " not CS");
    t.expect(is_pareto_optimal(*g, p, cfg.limits).holds, tag + " not PO");
  }
  return {t.ok(), t.summary("50 instances (" + std::to_string(tables) +
                            " table-backed): NS, CS and PO")};
}

Outcome1 non_monotone_pair(const SuiteConfig& cfg) {
  const HgcrpInstance g =
      HgcrpInstance::from_table({"1", "2"}, 2, {0, 1, 3, 2});
  Tally t;
  int partitions = 0;
  int stable = 0;
  for_each_partition(2, 2, [&](const Partition& p) {
    ++partitions;
    if (is_nash_stable(g, p).holds) ++stable;
    return false;
  });
  t.expect(partitions == 2, "expected 2 partitions, saw " +
                                std::to_string(partitions));
  t.expect(stable == 0, std::to_string(stable) + " NS partition(s) found");
  const SubmodularityReport rep = check_monotone_submodular(g, cfg.limits);
  t.expect(!rep.monotone, "not flagged non-monotone");
  return {t.ok(), t.summary("no NS partition; flagged non-monotone")};
}

Outcome1 brd_converges(const SuiteConfig& cfg) {
  Tally t;
  std::uint64_t total_moves = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(derive_seed(cfg.seed, 5, i));
    RandomParams params;
    params.beta = 1 + i % 3;
    params.kappa = 2 + (i / 3) % 3;
    params.agents = static_cast<int>(rng.between(2, 15));
    params.skills = static_cast<int>(rng.between(1, 6));
    params.density = 0.3 + 0.7 * rng.unit();
    params.seed = rng.next();
    const Instance inst = random_instance(params);
    const std::uint64_t start_seed = rng.next() | 1;
    const std::string tag = "instance " + std::to_string(i);

    const Partition p0 = initial_block_partition(inst, start_seed);
    const DynamicsResult r = imitative_brd(inst, p0, cfg.limits);
    const HgcrpInstance g = HgcrpInstance::from_heg(inst);
    t.expect(is_nash_stable(g, r.partition).holds, tag + " output not NS");
    const std::uint64_t bound = *brd_move_bound(inst);
    t.expect(r.trace.steps.size() <= bound,
             tag + ": " + std::to_string(r.trace.steps.size()) +
                 " moves > bound " + std::to_string(bound));
    total_moves += r.trace.steps.size();
    PotentialVector prev = psi(inst, p0);
    for (const MoveStep& step : r.trace.steps) {
      t.expect(lex_compare(step.psi_after, prev) == LexOrder::Greater,
               tag + ": psi did not increase");
      t.expect(step.utility_after > step.utility_before,
               tag + ": mover did not improve");
      prev = step.psi_after;
    }
    t.expect(prev == psi(inst, r.partition), tag + ": trace psi mismatch");
  }
  return {t.ok(), t.summary("100 runs, " + std::to_string(total_moves) +
                            " moves, all within bound")};
}

Outcome1 cis_swaps(const SuiteConfig& cfg) {
  Tally t;
  int swaps = 0;
  int gamma_up = 0;
  int slot_up = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(derive_seed(cfg.seed, 6, i));
    RandomParams params;
    params.agents = static_cast<int>(rng.between(2, 12));
    params.kappa = static_cast<int>(rng.between(2, 4));
    params.skills = static_cast<int>(rng.between(1, 6));
    if (i % 2 == 0) params.beta = static_cast<int>(rng.between(1, 3));
    params.density = 0.3 + 0.7 * rng.unit();
    params.seed = rng.next();
    const Instance inst = random_instance(params);
    const std::string tag = "instance " + std::to_string(i);

    const DynamicsResult r = cis_algorithm(inst, rng.next() | 1, cfg.limits);
    const HgcrpInstance g = HgcrpInstance::from_heg(inst);
    t.expect(is_cis(g, r.partition).holds, tag + " output not CIS");
    const std::uint64_t bound = cis_swap_bound(inst);
    t.expect(r.trace.steps.size() <= bound,
             tag + ": " + std::to_string(r.trace.steps.size()) +
                 " swaps > bound " + std::to_string(bound));
    for (const MoveStep& step : r.trace.steps) {
      ++swaps;
      if (*step.gamma_after > *step.gamma_before) ++gamma_up;
      if (strictly_greater(step.utility_after, step.utility_before,
                           inst.epsilon())) {
        ++slot_up;
      }
    }
  }
  t.expect(gamma_up == swaps,
           "gamma rose in " + std::to_string(gamma_up) + " of " +
               std::to_string(swaps) + " swaps (slot utility rose in " +
               std::to_string(slot_up) + ")");
  t.expect(slot_up == swaps, "slot utility did not rise on every swap");
  return {t.ok(), t.summary("100 runs, " + std::to_string(swaps) +
                            " swaps, gamma rose on each")};
}

Instance seeded_instance(Rng& rng, int i, int max_agents, int max_kappa) {
  RandomParams params;
  params.agents = static_cast<int>(rng.between(1, max_agents));
  params.kappa = static_cast<int>(rng.between(1, max_kappa));
  params.skills = static_cast<int>(rng.between(1, 6));
  if (i % 2 == 0) params.beta = static_cast<int>(rng.between(1, 3));
  params.density = 0.3 + 0.7 * rng.unit();
  params.seed = rng.next();
  return random_instance(params);
}

Outcome1 greedy_ratio(const SuiteConfig& cfg) {
  Tally t;
  double worst = 1.0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(derive_seed(cfg.seed, 7, i));
    const Instance inst = seeded_instance(rng, i, 12, 4);
    const auto pool = all_agents(inst.num_agents());
    const double greedy = joint_utility(inst, greedy_max_joint_utility(inst, pool));
    const double best =
        joint_utility(inst, brute_force_max_joint_utility(inst, pool, cfg.limits));
    const double ratio = best > 0 ? greedy / best : 1.0;
    worst = std::min(worst, ratio);
    t.expect(ratio >= kGreedyRatio - kRealTolerance,
             "instance " + std::to_string(i) + " ratio " + fmt(ratio));
  }
  // Greedy takes {1,2,3,4} first and then covers one more element; the
  // optimum pairs the other two sets.
  const SetSystem adversarial{6, {{1, 2, 3, 4}, {1, 2, 5}, {3, 4, 6}}, 2};
  const Instance inst = from_max_coverage(adversarial);
  const auto pool = all_agents(inst.num_agents());
  const double greedy = joint_utility(inst, greedy_max_joint_utility(inst, pool));
  const double best =
      joint_utility(inst, brute_force_max_joint_utility(inst, pool, cfg.limits));
  t.expect(greedy < best, "adversarial instance solved exactly by greedy");
  return {t.ok(), t.summary("worst random ratio " + fmt(worst) +
                            "; adversarial " + fmt(greedy) + "/" + fmt(best))};
}

Outcome1 greedy_core(const SuiteConfig& cfg) {
  Tally t;
  for (int i = 0; i < 100; ++i) {
    Rng rng(derive_seed(cfg.seed, 8, i));
    const Instance inst = seeded_instance(rng, i, 12, 4);
    const HgcrpInstance g = HgcrpInstance::from_heg(inst);
    const Partition p = greedy_core_partition(inst);
    const StabilityReport rep =
        is_alpha_core_stable(g, p, kGreedyRatio, cfg.limits);
    t.expect(rep.holds, "instance " + std::to_string(i) +
                            " has an alpha-blocking coalition");
  }
  return {t.ok(), t.summary("100 partitions, no alpha-blocking coalition")};
}

// Every multiset of `n` non-empty subsets of {1..m} covering {1..m}.
void covering_families(int m, int n, int k, std::vector<SetSystem>& out) {
  const int top = (1 << m) - 1;
  std::vector<int> pick(static_cast<std::size_t>(n), 1);
  while (true) {
    int unioned = 0;
    for (int mask : pick) unioned |= mask;
    if (unioned == top) {
      SetSystem ss{m, {}, k};
      for (int mask : pick) {
        std::vector<int> set;
        for (int e = 0; e < m; ++e) {
          if (mask >> e & 1) set.push_back(e + 1);
        }
        ss.sets.push_back(std::move(set));
      }
      out.push_back(std::move(ss));
    }
    int pos = n - 1;
    while (pos >= 0 && pick[pos] == top) --pos;
    if (pos < 0) return;
    ++pick[pos];
    for (int j = pos + 1; j < n; ++j) pick[j] = pick[pos];
  }
}

SetSystem random_covering_family(int m, int n, int k, Rng& rng) {
  SetSystem ss{m, std::vector<std::vector<int>>(static_cast<std::size_t>(n)), k};
  std::vector<bool> covered(static_cast<std::size_t>(m) + 1, false);
  for (auto& set : ss.sets) {
    for (int e = 1; e <= m; ++e) {
      if (rng.chance(0.4)) {
        set.push_back(e);
        covered[e] = true;
      }
    }
  }
  for (int e = 1; e <= m; ++e) {
    if (!covered[e]) ss.sets[rng.below(n)].push_back(e);
  }
  for (auto& set : ss.sets) {
    if (set.empty()) set.push_back(static_cast<int>(rng.between(1, m)));
    std::sort(set.begin(), set.end());
  }
  return ss;
}

Outcome1 hardness(const SuiteConfig& cfg) {
  std::vector<SetSystem> family;
  for (int k = 2; k <= 3; ++k) {
    for (int n = k; n <= 6; ++n) {
      for (int m = 1; m <= 3; ++m) covering_families(m, n, k, family);
      for (int m = 4; m <= 6; ++m) {
        Rng rng(derive_seed(cfg.seed, 9, m * 100 + n * 10 + k));
        for (int r = 0; r < 10; ++r) {
          family.push_back(random_covering_family(m, n, k, rng));
        }
      }
    }
  }
  Tally t;
  int yes = 0;
  int no = 0;
  int witnessless = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const SetSystem& ss = family[i];
    const int n = static_cast<int>(ss.sets.size());
    const int k = ss.k;
    const std::string tag = "family " + std::to_string(i);
    const int x = set_cover_padding(n, k);
    const int expected_x = (n - k + (k - 2)) / (k - 1);
    t.expect(x == expected_x, tag + ": padding " + std::to_string(x));
    t.expect((n + x + k - 1) / k == x + 1, tag + ": block count");

    const Instance inst = from_set_cover(ss);
    const HgcrpInstance g = oracle::tabulate(HgcrpInstance::from_heg(inst));
    const bool has_cover = oracle::has_set_cover(ss, k);
    const auto perfect = oracle::find_perfect_partition(g, cfg.limits);
    t.expect(perfect.has_value() == has_cover,
             tag + ": perfect partition " +
                 (perfect ? "exists" : "missing") + ", cover " +
                 (has_cover ? "exists" : "missing"));
    if (perfect) {
      t.expect(is_perfect(g, *perfect, cfg.limits).holds,
               tag + ": perfect checker disagrees");
    }
    const auto witness = hardness_witness_partition(inst);
    if (has_cover) {
      ++yes;
      if (!witness) {
        ++witnessless;
      } else {
        t.expect(!is_pareto_optimal(g, *witness, cfg.limits).holds,
                 tag + ": witness PO on a yes-instance");
      }
    } else {
      ++no;
      if (!witness) {
        t.fail(tag + ": no witness on a no-instance");
      } else {
        t.expect(is_pareto_optimal(g, *witness, cfg.limits).holds,
                 tag + ": witness not PO on a no-instance");
      }
    }
  }
  return {t.ok(), t.summary(std::to_string(family.size()) + " families (" +
                            std::to_string(yes) + " yes, " +
                            std::to_string(no) + " no, " +
                            std::to_string(witnessless) +
                            " yes without witness)")};
}

Outcome1 vertex_cover(const SuiteConfig& cfg) {
  Tally t;
  std::uint64_t coalitions = 0;
  for (int i = 0; i < 20; ++i) {
    Rng rng(derive_seed(cfg.seed, 10, i));
    const int vertices = static_cast<int>(rng.between(2, 10));
    const double p = 0.2 + 0.6 * rng.unit();
    const std::optional<int> max_weight =
        i % 2 == 0 ? std::optional<int>(5) : std::nullopt;
    const int kappa = static_cast<int>(rng.between(1, vertices));
    const WeightedGraph wg =
        random_graph(vertices, p, max_weight, kappa, rng.next());
    const Instance inst = from_graph(wg);
    const bool exact = max_weight.has_value();
    const auto pool = all_agents(inst.num_agents());
    for_each_subset(pool, inst.kappa(), [&](std::span<const int> c) {
      ++coalitions;
      std::vector<std::string> ids;
      for (int a : c) ids.push_back(inst.agents()[a]);
      const double u = joint_utility(inst, c);
      const double w = oracle::incident_weight(wg, ids);
      t.expect(close(u, w, exact), "graph " + std::to_string(i) + ": U = " +
                                       fmt(u) + ", weight = " + fmt(w));
      return false;
    });
  }
  return {t.ok(), t.summary("20 graphs, " + std::to_string(coalitions) +
                            " coalitions match")};
}

Outcome1 containment(const SuiteConfig& cfg) {
  std::vector<HgcrpInstance> games;
  int index = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int kappa = 1; kappa <= n; ++kappa) {
      Rng rng(derive_seed(cfg.seed, 11, index++));
      RandomParams params;
      params.agents = n;
      params.kappa = kappa;
      params.skills = static_cast<int>(rng.between(1, 4));
      params.beta = static_cast<int>(rng.between(1, 3));
      params.density = 0.3 + 0.7 * rng.unit();
      params.seed = rng.next();
      games.push_back(HgcrpInstance::from_heg(random_instance(params)));
      params.beta.reset();
      params.seed = rng.next();
      games.push_back(HgcrpInstance::from_heg(random_instance(params)));
      const auto family = static_cast<TableFamily>(index % 3);
      games.push_back(random_submodular_table(n, kappa, family, rng.next()));
    }
  }
  games.push_back(HgcrpInstance::from_table({"1", "2"}, 2, {0, 1, 3, 2}));
  // Arbitrary integer tables, typically neither monotone nor submodular.
  for (int r = 0; r < 6; ++r) {
    Rng rng(derive_seed(cfg.seed, 11, 1000 + r));
    const int n = static_cast<int>(rng.between(2, 5));
    const int kappa = static_cast<int>(rng.between(1, n));
    std::vector<double> table(std::size_t{1} << n, 0.0);
    for (std::size_t mask = 1; mask < table.size(); ++mask) {
      table[mask] = static_cast<double>(rng.between(0, 4));
    }
    std::vector<std::string> ids;
    for (int a = 1; a <= n; ++a) ids.push_back(std::to_string(a));
    games.push_back(HgcrpInstance::from_table(ids, kappa, table));
  }

  Tally t;
  std::uint64_t partitions = 0;
  int counts[7] = {};
  for (std::size_t gi = 0; gi < games.size(); ++gi) {
    const HgcrpInstance& g = games[gi];
    for_each_partition(g.num_agents(), g.kappa(), [&](const Partition& p) {
      ++partitions;
      const StabilityReport reports[] = {
          is_nash_stable(g, p),
          is_cis(g, p),
          is_core_stable(g, p, cfg.limits),
          is_alpha_core_stable(g, p, 1.0, cfg.limits),
          is_perfect(g, p, cfg.limits),
          is_socially_optimal(g, p, cfg.limits),
          is_pareto_optimal(g, p, cfg.limits),
      };
      const std::string tag = "game " + std::to_string(gi);
      for (int r = 0; r < 7; ++r) {
        if (reports[r].holds) ++counts[r];
        t.expect(witness_is_valid(g, p, reports[r]),
                 tag + ": invalid " +
                     std::string(to_string(reports[r].property)) + " witness");
      }
      const bool ns = reports[0].holds, cis = reports[1].holds;
      const bool cs = reports[2].holds, acs = reports[3].holds;
      const bool perfect = reports[4].holds, so = reports[5].holds;
      const bool po = reports[6].holds;
      t.expect(!ns || cis, tag + ": NS but not CIS");
      t.expect(!perfect || so, tag + ": perfect but not SO");
      t.expect(!so || po, tag + ": SO but not PO");
      t.expect(cs == acs, tag + ": CS differs from 1-approximate CS");
      return false;
    });
  }
  std::string tallies;
  const char* names[] = {"NS", "CIS", "CS", "1-CS", "perfect", "SO", "PO"};
  for (int r = 0; r < 7; ++r) {
    tallies += std::string(r ? ", " : "") + names[r] + " " +
               std::to_string(counts[r]);
  }
  return {t.ok(), t.summary(std::to_string(games.size()) + " games, " +
                            std::to_string(partitions) + " partitions (" +
                            tallies + ")")};
}

struct Criterion {
  const char* title;
  double time_limit;
  Outcome1 (*run)(const SuiteConfig&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"two-student joint utility", 1, alice_and_bob},
    {"HEG utility is monotone submodular", 10, utility_submodular},
    {"psi-maximal partition is NS, CS and PO", 60, psi_maximal_stable},
    {"non-monotone two-agent game has no NS partition", 1, non_monotone_pair},
    {"imitative better-response dynamics reach NS", 30, brd_converges},
    {"critical-agent swaps reach CIS", 30, cis_swaps},
    {"greedy maximum joint utility ratio", 60, greedy_ratio},
    {"greedy core partition is (1-1/e)-approximately core stable", 120,
     greedy_core},
    {"set-cover hardness construction", 60, hardness},
    {"vertex cover game correspondence", 10, vertex_cover},
    {"containment of stability concepts", 30, containment},
};

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "PASS";
    case Outcome::Fail:
      return "FAIL";
    case Outcome::Skipped:
      return "SKIP";
  }
  return "?";
}

Limits suite_limits() {
  Limits limits;
  limits.partition_limit = 10;
  return limits;
}

CriterionResult run_criterion(int id, const SuiteConfig& config) {
  if (id < 1 || id > kCriterionCount) {
    throw InvalidArgument("criterion id out of range: " + std::to_string(id));
  }
  const Criterion& c = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = c.title;
  result.time_limit = c.time_limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome1 o = c.run(config);
    result.outcome = o.pass ? Outcome::Pass : Outcome::Fail;
    result.detail = o.detail;
  } catch (const CapabilityError& e) {
    result.outcome = Outcome::Skipped;
    result.detail = std::string("capability limit: ") + e.what();
  } catch (const std::exception& e) {
    result.outcome = Outcome::Fail;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  if (result.outcome == Outcome::Pass && result.seconds >= c.time_limit) {
    result.outcome = Outcome::Fail;
    result.detail += " (over the time limit)";
  }
  return result;
}

bool SuiteReport::all_passed() const {
  for (const auto& r : results) {
    if (r.outcome != Outcome::Pass) return false;
  }
  return !results.empty();
}

SuiteReport verify_paper(
    const SuiteConfig& config,
    const std::function<void(const CriterionResult&)>& on_result) {
  SuiteReport report;
  for (int id = 1; id <= kCriterionCount; ++id) {
    report.results.push_back(run_criterion(id, config));
    if (on_result) on_result(report.results.back());
  }
  return report;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %g s", r.seconds,
                r.time_limit);
  return "[" + std::string(to_string(r.outcome)) + "] " +
         (r.id < 10 ? " " : "") + std::to_string(r.id) + "  " + r.title +
         " (" + timing + "): " + r.detail;
}

}  // namespace heg::verify
