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

#include <algorithm>
#include <vector>

#include "heg/algorithms.hpp"
#include "heg/enumerate.hpp"
#include "heg/errors.hpp"
#include "heg/generators.hpp"
#include "heg/stability.hpp"
#include "test_util.hpp"

namespace heg {
namespace {

using testing::random_heg;

Instance unit_rows(int agents, int kappa) {
  std::vector<std::string> ids;
  for (int i = 1; i <= agents; ++i) ids.push_back("a" + std::to_string(i));
  return Instance(ids, {"s"}, std::vector<double>(agents, 1.0), kappa);
}

TEST(BlockPartitionTest, SeedZeroChunksInOrder) {
  const Partition p = initial_block_partition(unit_rows(5, 2), 0);
  EXPECT_EQ(p, Partition({Coalition{0, 1}, Coalition{2, 3}, Coalition{4}}, 5, 2));
  EXPECT_EQ(initial_block_partition(unit_rows(4, 2), 0).size(), 2);
}

TEST(BlockPartitionTest, SizesForAnySeed) {
  const Instance inst = unit_rows(11, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Partition p = initial_block_partition(inst, seed);
    std::vector<int> sizes;
    for (const auto& c : p.coalitions()) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<int>{2, 3, 3, 3}));
  }
}

TEST(ImitativeBrdTest, ConvergesWithinBoundAndRaisesPsi) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = random_heg(12, 4, 3, 3, seed);
    const auto g = HgcrpInstance::from_heg(inst);
    const Partition p0 = initial_block_partition(inst, seed);
    const DynamicsResult r = imitative_brd(inst, p0);
    EXPECT_TRUE(is_nash_stable(g, r.partition).holds);
    ASSERT_TRUE(brd_move_bound(inst).has_value());
    EXPECT_EQ(*brd_move_bound(inst), 3u * 4u * 4u * 3u);
    EXPECT_LE(r.trace.steps.size(), *brd_move_bound(inst));
    PotentialVector prev = psi(inst, p0);
    for (const auto& step : r.trace.steps) {
      EXPECT_EQ(lex_compare(step.psi_after, prev), LexOrder::Greater);
      EXPECT_GT(step.utility_after, step.utility_before);
      EXPECT_TRUE(step.to.contains(step.agent));
      prev = step.psi_after;
    }
  }
}

TEST(ImitativeBrdTest, StablePartitionIsReturnedUnchanged) {
  const Instance inst = unit_rows(4, 2);
  const Partition p0 = initial_block_partition(inst, 0);
  const DynamicsResult r = imitative_brd(inst, p0);
  EXPECT_EQ(r.partition, p0);
  EXPECT_TRUE(r.trace.steps.empty());
}

TEST(ImitativeBrdTest, RejectsNonBlockStart) {
  const Instance inst = unit_rows(4, 2);
  EXPECT_THROW(imitative_brd(inst, Partition::singletons(4)), InvalidArgument);
}

TEST(ImitativeBrdTest, RealValuedRunsRespectTheStepCap) {
  const Instance inst = random_heg(10, 3, 3, std::nullopt, 4);
  EXPECT_FALSE(brd_move_bound(inst).has_value());
  const DynamicsResult r = imitative_brd(inst, 4);
  EXPECT_TRUE(is_nash_stable(HgcrpInstance::from_heg(inst), r.partition).holds);
}

TEST(CriticalTest, MatchesUtilityDrop) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = random_heg(6, 3, 6, seed % 2 ? std::optional<int>(2)
                                                       : std::nullopt,
                                     seed);
    for (std::uint64_t mask = 1; mask < 64; ++mask) {
      const Coalition c = Coalition::from_mask(mask);
      for (int i : c) {
        EXPECT_EQ(is_critical(inst, i, c),
                  joint_utility(inst, c) > joint_utility(inst, c.without(i)));
      }
    }
  }
}

TEST(CriticalTest, SingletonsAndDuplicates) {
  const Instance inst({"a", "b"}, {"x", "y"}, {2, 1, 2, 1}, 2);
  EXPECT_TRUE(is_critical(inst, 0, Coalition{0}));
  EXPECT_FALSE(is_critical(inst, 0, Coalition{0, 1}));
  EXPECT_FALSE(is_critical(inst, 1, Coalition{0, 1}));
  EXPECT_EQ(critical_count(inst, Coalition{0, 1}), 0);
}

TEST(CisAlgorithmTest, ProducesCisWithinBound) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst =
        random_heg(static_cast<int>(4 + seed % 9), 3, static_cast<int>(2 + seed % 3),
                   seed % 2 ? std::optional<int>(3) : std::nullopt, seed);
    const DynamicsResult r = cis_algorithm(inst, seed);
    EXPECT_TRUE(is_cis(HgcrpInstance::from_heg(inst), r.partition).holds);
    EXPECT_LE(r.trace.steps.size(), cis_swap_bound(inst));
    for (const auto& step : r.trace.steps) {
      EXPECT_EQ(step.kind, StepKind::CisSwap);
      EXPECT_GT(step.utility_after, step.utility_before);
    }
  }
}

TEST(CisAlgorithmTest, DivisibleSizeReturnsBlocks) {
  const Instance inst = random_heg(6, 3, 3, 2, 7);
  const DynamicsResult r = cis_algorithm(inst, 7);
  EXPECT_EQ(r.partition, initial_block_partition(inst, 7));
  EXPECT_TRUE(r.trace.steps.empty());
}

// The swap keeps the slot's utility rising but can leave the number of
// critical members unchanged.
TEST(CisAlgorithmTest, CriticalCountNeedNotRise) {
  const Instance inst({"k", "j", "jp"}, {"x", "y"}, {1, 0, 0, 0, 2, 0}, 2);
  const DynamicsResult r = cis_algorithm(inst, 0);
  ASSERT_EQ(r.trace.steps.size(), 1u);
  const MoveStep& step = r.trace.steps[0];
  EXPECT_EQ(step.agent, 1);
  EXPECT_EQ(*step.partner, 2);
  EXPECT_EQ(*step.gamma_before, 1);
  EXPECT_EQ(*step.gamma_after, 1);
  EXPECT_EQ(step.utility_before, 1);
  EXPECT_EQ(step.utility_after, 2);
}

TEST(GreedyTest, PoolEdgeCases) {
  const Instance inst = random_heg(6, 3, 3, 3, 2);
  const std::vector<int> one{4};
  EXPECT_EQ(greedy_max_joint_utility(inst, one), (Coalition{4}));
  EXPECT_EQ(brute_force_max_joint_utility(inst, one), (Coalition{4}));
  const Instance wide = random_heg(4, 3, 6, 3, 2);
  const auto all = all_agents(4);
  EXPECT_EQ(greedy_max_joint_utility(wide, all), (Coalition{0, 1, 2, 3}));
  EXPECT_EQ(joint_utility(wide, brute_force_max_joint_utility(wide, all)),
            joint_utility(wide, Coalition{0, 1, 2, 3}));
}

TEST(GreedyTest, RatioAndOptimality) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = random_heg(10, 5, 3, seed % 2 ? std::optional<int>(3)
                                                        : std::nullopt,
                                     seed, 0.5);
    const auto all = all_agents(10);
    const double greedy = joint_utility(inst, greedy_max_joint_utility(inst, all));
    const double best = joint_utility(inst, brute_force_max_joint_utility(inst, all));
    EXPECT_GE(best, greedy);
    EXPECT_GE(greedy, kGreedyRatio * best - 1e-9);
  }
}

TEST(GreedyTest, NotExactOnAdversarialCoverage) {
  const Instance inst =
      from_max_coverage({6, {{1, 2, 3, 4}, {1, 2, 5}, {3, 4, 6}}, 2});
  const auto all = all_agents(3);
  EXPECT_EQ(joint_utility(inst, greedy_max_joint_utility(inst, all)), 5);
  EXPECT_EQ(joint_utility(inst, brute_force_max_joint_utility(inst, all)), 6);
}

TEST(GreedyTest, BruteForceRespectsBudget) {
  const Instance inst = random_heg(12, 3, 4, 2, 1);
  Limits tight;
  tight.subset_budget = 100;
  EXPECT_THROW(brute_force_max_joint_utility(inst, all_agents(12), tight),
               CapabilityError);
}

TEST(GreedyCoreTest, GrandCoalitionWhenKappaCoversEveryone) {
  const Instance inst = random_heg(4, 2, 4, 2, 3);
  EXPECT_EQ(greedy_core_partition(inst), Partition::grand(4));
}

TEST(GreedyCoreTest, FirstCoalitionIsNearOptimal) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = random_heg(10, 4, 3, 1, seed);
    const auto seq = greedy_core_sequence(inst);
    const double best =
        joint_utility(inst, brute_force_max_joint_utility(inst, all_agents(10)));
    EXPECT_GE(joint_utility(inst, seq.front()), kGreedyRatio * best - 1e-9);
    EXPECT_TRUE(is_alpha_core_stable(HgcrpInstance::from_heg(inst),
                                     greedy_core_partition(inst), kGreedyRatio)
                    .holds);
  }
}

}  // namespace
}  // namespace heg
