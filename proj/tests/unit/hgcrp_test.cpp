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
#include <bit>
#include <vector>

#include "heg/enumerate.hpp"
#include "heg/errors.hpp"
#include "heg/generators.hpp"
#include "heg/hgcrp.hpp"
#include "heg/stability.hpp"
#include "test_util.hpp"

namespace heg {
namespace {

using testing::non_monotone_pair;
using testing::random_heg;

const std::vector<int>& all_agents_for_test() {
  static const std::vector<int> all{0, 1, 2, 3, 4};
  return all;
}

PotentialVector pv(std::vector<double> v) { return PotentialVector(std::move(v)); }

TEST(HgcrpTest, NonMonotonePairIsFlaggedNonMonotone) {
  const SubmodularityReport rep = check_monotone_submodular(non_monotone_pair());
  EXPECT_FALSE(rep.monotone);
  ASSERT_TRUE(rep.counterexample.has_value());
  EXPECT_EQ(rep.counterexample->kind,
            SubmodularityViolation::Kind::Monotonicity);
  EXPECT_EQ(rep.counterexample->smaller, (Coalition{1}));
  EXPECT_EQ(rep.counterexample->larger, (Coalition{0, 1}));
}

TEST(HgcrpTest, HegBackedAndConstantGamesAreMonotoneSubmodular) {
  for (int seed = 1; seed <= 5; ++seed) {
    const auto g = HgcrpInstance::from_heg(
        random_heg(6, 3, 3, seed % 2 ? std::optional<int>(3) : std::nullopt,
                   seed));
    const auto rep = check_monotone_submodular(g);
    EXPECT_TRUE(rep.monotone && rep.submodular);
  }
  std::vector<double> table(16, 5.0);
  table[0] = 0;
  const auto constant = HgcrpInstance::from_table({"a", "b", "c", "d"}, 4, table);
  const auto rep = check_monotone_submodular(constant);
  EXPECT_TRUE(rep.monotone);
  EXPECT_TRUE(rep.submodular);
}

TEST(HgcrpTest, SubmodularityViolationIsReported) {
  // Supermodular: U = |C|^2.
  std::vector<double> table(8);
  for (int m = 0; m < 8; ++m) table[m] = std::popcount(static_cast<unsigned>(m)) *
                                         std::popcount(static_cast<unsigned>(m));
  const auto g = HgcrpInstance::from_table({"a", "b", "c"}, 3, table);
  const auto rep = check_monotone_submodular(g);
  EXPECT_TRUE(rep.monotone);
  EXPECT_FALSE(rep.submodular);
  ASSERT_TRUE(rep.counterexample && rep.counterexample->added);
  const auto& v = *rep.counterexample;
  const double small_gain =
      g.utility(v.smaller.with(*v.added)) - g.utility(v.smaller);
  const double large_gain = g.utility(v.larger.with(*v.added)) - g.utility(v.larger);
  EXPECT_LT(small_gain, large_gain);
}

TEST(HgcrpTest, SampledCheckAgreesOnSubmodularTables) {
  for (auto family : {TableFamily::WeightedCoverage, TableFamily::ConcaveOfModular,
                      TableFamily::BudgetAdditive}) {
    const auto g = random_submodular_table(8, 4, family, 3);
    const auto rep = sample_monotone_submodular(g, 2000, 9);
    EXPECT_TRUE(rep.monotone && rep.submodular);
    EXPECT_EQ(rep.triples, 2000u);
  }
}

TEST(HgcrpTest, OracleGamesAboveTheLimitAreRefused) {
  std::vector<std::string> ids;
  for (int i = 0; i < 14; ++i) ids.push_back("x" + std::to_string(i));
  const auto g = HgcrpInstance::from_oracle(
      ids, 3, [](std::span<const AgentIndex> c) { return double(c.size()); },
      true);
  EXPECT_THROW(check_monotone_submodular(g), CapabilityError);
}

TEST(HgcrpTest, TableValidation) {
  EXPECT_THROW(HgcrpInstance::from_table({"a"}, 1, {1, 2}), InvalidArgument);
  EXPECT_THROW(HgcrpInstance::from_table({"a"}, 1, {0}), InvalidArgument);
  EXPECT_THROW(HgcrpInstance::from_table({"a", "b"}, 0, {0, 1, 1, 1}),
               InvalidArgument);
}

TEST(PsiTest, SortedUtilities) {
  const auto g = non_monotone_pair();
  EXPECT_EQ(psi(g, Partition::singletons(2)), pv({3, 1}));
  EXPECT_EQ(psi(g, Partition::grand(2)), pv({2, 2}));
  EXPECT_EQ(psi(g, Partition::singletons(2)).values()[0], 3);
}

TEST(PsiTest, MultisetMatchesAgentUtilities) {
  const Instance inst = random_heg(5, 3, 3, 2, 4);
  const auto g = HgcrpInstance::from_heg(inst);
  for_each_partition(5, 3, [&](const Partition& p) {
    std::vector<double> utilities;
    for (int i = 0; i < 5; ++i) utilities.push_back(agent_utility(inst, p, i));
    std::sort(utilities.rbegin(), utilities.rend());
    const PotentialVector pot = psi(g, p);
    const auto v = pot.values();
    EXPECT_TRUE(std::equal(v.begin(), v.end(), utilities.begin(), utilities.end()));
    return false;
  });
}

TEST(PsiTest, LexicographicComparison) {
  EXPECT_EQ(lex_compare(pv({3, 1}), pv({2, 2})), LexOrder::Greater);
  EXPECT_EQ(lex_compare(pv({2, 2}), pv({2, 2})), LexOrder::Equal);
  EXPECT_EQ(lex_compare(pv({2, 2, 1}), pv({2, 2, 3})), LexOrder::Less);
  EXPECT_EQ(lex_compare(pv({1.0, 0.5}), pv({1.0 + 1e-12, 0.5}), 1e-9),
            LexOrder::Equal);
  EXPECT_THROW(lex_compare(pv({1}), pv({1, 1})), InvalidArgument);
}

TEST(PsiTest, PsiMaximalPartition) {
  EXPECT_EQ(psi_maximal_partition(non_monotone_pair()), Partition::singletons(2));
  const auto one = HgcrpInstance::from_table({"a"}, 1, {0, 4});
  EXPECT_EQ(psi_maximal_partition(one), Partition::singletons(1));
  const auto g = random_submodular_table(5, 3, TableFamily::WeightedCoverage, 2);
  const Partition p = psi_maximal_partition(g);
  EXPECT_TRUE(is_nash_stable(g, p).holds);
  EXPECT_TRUE(is_core_stable(g, p).holds);
  EXPECT_TRUE(is_pareto_optimal(g, p).holds);
  Limits tight;
  tight.partition_limit = 4;
  EXPECT_THROW(psi_maximal_partition(g, tight), CapabilityError);
}

TEST(PsiTest, InducedPartition) {
  const Partition p({Coalition{0, 1}, Coalition{2, 3}}, 4, 2);
  const Partition q = induced_partition(p, Coalition{1, 2});
  EXPECT_EQ(q, Partition({Coalition{0}, Coalition{1, 2}, Coalition{3}}, 4, 2));
}

// A better response into a non-full coalition raises psi, and so do
// blocking deviations and Pareto improvements.
TEST(PsiTest, DeviationsRaisePsi) {
  for (int seed = 1; seed <= 20; ++seed) {
    const Instance inst = random_heg(5, 3, 3, 3, seed);
    const auto g = HgcrpInstance::from_heg(inst);
    for_each_partition(5, 3, [&](const Partition& p) {
      const auto base = psi(g, p);
      for (const auto& target : p.coalitions()) {
        if (target.size() >= 3) continue;
        for (int i = 0; i < 5; ++i) {
          if (target.contains(i)) continue;
          const Coalition moved = target.with(i);
          if (g.utility(moved) > g.utility(p.coalition_of(i))) {
            EXPECT_EQ(lex_compare(psi(g, induced_partition(p, moved)), base),
                      LexOrder::Greater);
          }
        }
      }
      for_each_subset(all_agents_for_test(), 3, [&](std::span<const int> c) {
        const Coalition cc{std::vector<int>(c.begin(), c.end())};
        if (blocks(g, cc, p)) {
          EXPECT_EQ(lex_compare(psi(g, induced_partition(p, cc)), base),
                    LexOrder::Greater);
        }
        return false;
      });
      return false;
    });
  }
}

}  // namespace
}  // namespace heg
