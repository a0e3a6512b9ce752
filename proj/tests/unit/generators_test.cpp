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

#include <gtest/gtest.h>

#include <vector>

#include "heg/algorithms.hpp"
#include "heg/enumerate.hpp"
#include "heg/errors.hpp"
#include "heg/generators.hpp"
#include "heg/hgcrp.hpp"
#include "heg/oracles.hpp"
#include "heg/stability.hpp"

namespace heg {
namespace {

TEST(MaxCoverageTest, SmallFamily) {
  const Instance inst = from_max_coverage({3, {{1, 2}, {2, 3}}, 2});
  EXPECT_EQ(inst.num_agents(), 2);
  EXPECT_EQ(inst.num_skills(), 3);
  EXPECT_EQ(inst.kappa(), 2);
  EXPECT_EQ(joint_utility(inst, Coalition{0, 1}), 3);
  EXPECT_EQ(joint_utility(inst, Coalition{1}), 2);
}

TEST(MaxCoverageTest, EmptyFamilyIsRejected) {
  EXPECT_THROW(from_max_coverage({3, {}, 2}), InvalidArgument);
  EXPECT_THROW(from_max_coverage({3, {{4}}, 1}), InvalidArgument);
  EXPECT_THROW(from_max_coverage({3, {{1}}, 0}), InvalidArgument);
}

TEST(MaxCoverageTest, UtilityEqualsCoverage) {
  const SetSystem ss = random_set_system(6, 7, 3, 0.4, 12);
  const Instance inst = from_max_coverage(ss);
  for_each_subset(all_agents(7), 7, [&](std::span<const int> c) {
    EXPECT_EQ(joint_utility(inst, c), oracle::coverage(ss, c));
    return false;
  });
}

TEST(MaxCoverageTest, OptimumIsUniverseWhenACoverFits) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SetSystem ss = random_set_system(5, 6, 2, 0.5, seed);
    const Instance inst = from_max_coverage(ss);
    const double best = joint_utility(
        inst, brute_force_max_joint_utility(inst, all_agents(6)));
    EXPECT_EQ(best == 5, oracle::has_set_cover(ss, 2)) << seed;
  }
}

TEST(SetCoverTest, PaddingCount) {
  EXPECT_EQ(set_cover_padding(5, 3), 1);
  EXPECT_EQ(set_cover_padding(6, 2), 4);
  EXPECT_EQ(set_cover_padding(6, 3), 2);
  EXPECT_EQ(set_cover_padding(3, 3), 0);
  EXPECT_THROW(set_cover_padding(5, 1), InvalidArgument);
  EXPECT_THROW(set_cover_padding(2, 3), InvalidArgument);
}

TEST(SetCoverTest, PaddingAgentsAndMeta) {
  const Instance inst = from_set_cover({3, {{1}, {2}, {3}, {1, 2}, {3}}, 3});
  EXPECT_EQ(inst.num_agents(), 6);
  ASSERT_TRUE(inst.meta().has_value());
  EXPECT_EQ(inst.meta()->source, "set-cover");
  EXPECT_EQ(inst.meta()->padding, (std::vector<AgentIndex>{5}));
  EXPECT_EQ(joint_utility(inst, Coalition{5}), 3);
}

TEST(SetCoverTest, WitnessOnNoAndYesInstances) {
  const Limits limits{.partition_limit = 10};
  const SetSystem no{4, {{1}, {2}, {3}, {4}}, 2};
  const Instance no_inst = from_set_cover(no);
  const auto w = hardness_witness_partition(no_inst);
  ASSERT_TRUE(w.has_value());
  const auto g_no = HgcrpInstance::from_heg(no_inst);
  EXPECT_TRUE(is_pareto_optimal(g_no, *w, limits).holds);
  // Each padding block holds exactly one padding agent.
  const auto& padding = no_inst.meta()->padding;
  int blocks_with_padding = 0;
  for (const auto& c : w->coalitions()) {
    int count = 0;
    for (int a : padding) count += c.contains(a);
    EXPECT_LE(count, 1);
    blocks_with_padding += count;
  }
  EXPECT_EQ(blocks_with_padding, static_cast<int>(padding.size()));

  const SetSystem yes{4, {{1, 2}, {3}, {3, 4}, {1}}, 2};
  const Instance yes_inst = from_set_cover(yes);
  const auto wy = hardness_witness_partition(yes_inst);
  ASSERT_TRUE(wy.has_value());
  EXPECT_FALSE(
      is_pareto_optimal(HgcrpInstance::from_heg(yes_inst), *wy, limits).holds);
}

TEST(GraphTest, TriangleWithUnitWeights) {
  const WeightedGraph tri{{"u", "v", "w"},
                          {{"u", "v", 1}, {"v", "w", 1}, {"u", "w", 1}},
                          3};
  const Instance inst = from_graph(tri);
  EXPECT_EQ(inst.num_skills(), 3);
  EXPECT_EQ(joint_utility(inst, Coalition{0}), 2);
  EXPECT_EQ(joint_utility(inst, Coalition{0, 1}), 3);
  EXPECT_EQ(joint_utility(inst, Coalition{0, 1, 2}), 3);
}

TEST(GraphTest, MatchesIncidentWeightOracle) {
  const WeightedGraph wg = random_graph(8, 0.5, std::nullopt, 4, 3);
  const Instance inst = from_graph(wg);
  for_each_subset(all_agents(8), 4, [&](std::span<const int> c) {
    std::vector<std::string> ids;
    for (int a : c) ids.push_back(inst.agents()[a]);
    EXPECT_NEAR(joint_utility(inst, c), oracle::incident_weight(wg, ids), 1e-9);
    return false;
  });
}

TEST(GraphTest, RejectsBadEdges) {
  EXPECT_THROW(from_graph({{"u"}, {{"u", "x", 1}}, 1}), InvalidArgument);
  EXPECT_THROW(from_graph({{"u", "v"}, {{"u", "v", -1}}, 1}), InvalidArgument);
}

TEST(RandomTest, DeterministicPerSeed) {
  RandomParams params{.agents = 7, .skills = 4, .kappa = 3, .beta = 3,
                      .density = 0.6, .seed = 42};
  const Instance a = random_instance(params);
  const Instance b = random_instance(params);
  for (int i = 0; i < 7; ++i) {
    for (int s = 0; s < 4; ++s) EXPECT_EQ(a.expertise(i, s), b.expertise(i, s));
  }
  params.seed = 43;
  const Instance c = random_instance(params);
  bool differs = false;
  for (int i = 0; i < 7; ++i) {
    for (int s = 0; s < 4; ++s) differs |= a.expertise(i, s) != c.expertise(i, s);
  }
  EXPECT_TRUE(differs);
}

TEST(RandomTest, AllOnesIsSymmetric) {
  const Instance inst = random_instance(
      {.agents = 5, .skills = 3, .kappa = 5, .beta = 1, .density = 1.0, .seed = 1});
  for (int i = 0; i < 5; ++i) {
    for (int s = 0; s < 3; ++s) EXPECT_EQ(inst.expertise(i, s), 1);
  }
  EXPECT_EQ(joint_utility(inst, Coalition{0, 1}), joint_utility(inst, Coalition{2, 4}));
}

TEST(RandomTest, GeneratedGamesAreMonotoneSubmodular) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = HgcrpInstance::from_heg(random_instance(
        {.agents = 6, .skills = 3, .kappa = 3, .beta = std::nullopt,
         .density = 0.5, .seed = seed}));
    const auto rep = check_monotone_submodular(g);
    EXPECT_TRUE(rep.monotone && rep.submodular);
  }
}

}  // namespace
}  // namespace heg
