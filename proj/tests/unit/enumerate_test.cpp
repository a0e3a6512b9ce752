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

#include <cstdint>
#include <set>
#include <vector>

#include "heg/enumerate.hpp"

namespace heg {
namespace {

TEST(EnumerateTest, CountsSubsetsAndPartitions) {
  EXPECT_EQ(count_subsets(4, 2), 10u);
  EXPECT_EQ(count_subsets(5, 5), 31u);
  EXPECT_EQ(count_subsets(0, 3), 0u);
  EXPECT_EQ(count_partitions(4, 4), 15u);  // Bell(4)
  EXPECT_EQ(count_partitions(5, 5), 52u);
  EXPECT_EQ(count_partitions(4, 2), 10u);  // involutions
  EXPECT_EQ(count_partitions(4, 1), 1u);
  EXPECT_EQ(count_subsets(200, 100), UINT64_MAX);
}

TEST(EnumerateTest, SubsetsInCanonicalOrder) {
  const std::vector<int> pool{0, 1, 2};
  std::vector<std::vector<int>> seen;
  for_each_subset(pool, 2, [&](std::span<const int> c) {
    seen.emplace_back(c.begin(), c.end());
    return false;
  });
  const std::vector<std::vector<int>> expected{{0}, {1}, {2},
                                               {0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(seen, expected);
}

TEST(EnumerateTest, SubsetScanStopsEarly) {
  const std::vector<int> pool{4, 7, 9};
  int visits = 0;
  const bool stopped = for_each_subset(pool, 3, [&](std::span<const int> c) {
    ++visits;
    return c.size() == 2;
  });
  EXPECT_TRUE(stopped);
  EXPECT_EQ(visits, 4);
}

TEST(EnumerateTest, PartitionsAreDistinctAndCounted) {
  for (int n = 1; n <= 6; ++n) {
    for (int kappa = 1; kappa <= n; ++kappa) {
      std::set<std::vector<std::vector<int>>> seen;
      for_each_partition(n, kappa, [&](const Partition& p) {
        std::vector<std::vector<int>> key;
        for (const auto& c : p.coalitions()) {
          EXPECT_LE(c.size(), kappa);
          key.emplace_back(c.begin(), c.end());
        }
        EXPECT_TRUE(seen.insert(key).second);
        return false;
      });
      EXPECT_EQ(seen.size(), count_partitions(n, kappa)) << n << " " << kappa;
    }
  }
}

TEST(EnumerateTest, ParallelSearchMatchesSequential) {
  std::vector<int> pool(32);
  for (int i = 0; i < 32; ++i) pool[i] = i;
  auto value = [](std::span<const int> c) {
    double v = 0;
    for (int i : c) v += (i * 37 % 11) - 0.1 * static_cast<double>(c.size());
    return v;
  };
  const auto one = best_subset(pool, 4, value, 1);
  const auto four = best_subset(pool, 4, value, 4);
  EXPECT_EQ(one, four);
  auto pred = [](std::span<const int> c) {
    int s = 0;
    for (int i : c) s += i;
    return c.size() == 4 && s == 60;
  };
  EXPECT_EQ(find_first_subset(pool, 4, pred, 1),
            find_first_subset(pool, 4, pred, 3));
}

}  // namespace
}  // namespace heg
