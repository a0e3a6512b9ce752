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

#include <string>
#include <variant>

#include "heg/algorithms.hpp"
#include "heg/errors.hpp"
#include "heg/generators.hpp"
#include "heg/io.hpp"
#include "test_util.hpp"

namespace heg {
namespace {

using testing::alice_bob;
using testing::random_heg;

constexpr const char* kAliceBob = R"({
  "type": "heg",
  "skills": ["Python", "Java", "SQL"],
  "kappa": 2,
  "agents": [
    {"id": "Alice", "expertise": [1, 3, 3]},
    {"id": "Bob", "expertise": [3, 3, 1]}
  ]
})";

TEST(IoTest, ParsesInstance) {
  const Instance inst = parse_instance(kAliceBob);
  EXPECT_EQ(inst.num_agents(), 2);
  EXPECT_EQ(inst.kappa(), 2);
  EXPECT_EQ(joint_utility(inst, Coalition{0, 1}), 9);
}

TEST(IoTest, InstanceRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Instance inst = random_heg(5, 3, 2, seed % 2 ? std::optional<int>(3)
                                                       : std::nullopt,
                                     seed);
    const std::string text = serialize(inst);
    EXPECT_EQ(serialize(parse_instance(text)), text);
  }
  const Instance padded = from_set_cover({3, {{1}, {2, 3}, {3}, {1}}, 2});
  const std::string text = serialize(padded);
  const Instance back = parse_instance(text);
  ASSERT_TRUE(back.meta().has_value());
  EXPECT_EQ(back.meta()->padding, padded.meta()->padding);
  EXPECT_EQ(serialize(back), text);
}

TEST(IoTest, HgcrpParseAndRoundTrip) {
  const HgcrpInstance g = parse_hgcrp(
      R"({"type":"hgcrp","agents":["1","2"],"utilities":{"1":1,"1,2":2,"2":3}})");
  EXPECT_EQ(g.kappa(), 2);
  EXPECT_EQ(g.utility(Coalition{0, 1}), 2);
  EXPECT_EQ(g.utility(Coalition{1}), 3);
  const std::string text = serialize(g);
  EXPECT_EQ(serialize(parse_hgcrp(text)), text);
  EXPECT_TRUE(std::holds_alternative<HgcrpInstance>(parse_game(text)));
  EXPECT_TRUE(std::holds_alternative<Instance>(parse_game(kAliceBob)));
}

TEST(IoTest, HgcrpMissingSubsetIsRejected) {
  EXPECT_THROW(
      parse_hgcrp(R"({"type":"hgcrp","agents":["1","2"],"utilities":{"1":1}})"),
      InvalidArgument);
}

TEST(IoTest, PartitionRoundTrip) {
  const Instance inst = alice_bob();
  const Partition p = parse_partition(R"({"coalitions":[["Bob"],["Alice"]]})",
                                      inst.agents(), inst.kappa());
  EXPECT_EQ(p, Partition::singletons(2));
  const std::string text = serialize(p, inst.agents());
  EXPECT_EQ(parse_partition(text, inst.agents(), 2), p);
  EXPECT_THROW(parse_partition(R"({"coalitions":[["Alice"]]})", inst.agents(), 2),
               InvalidPartition);
  EXPECT_THROW(
      parse_partition(R"({"coalitions":[["Alice","Carol"]]})", inst.agents(), 2),
      InvalidReference);
}

TEST(IoTest, SetSystemAndGraphRoundTrip) {
  const SetSystem ss = parse_set_system(R"({"m":3,"sets":[[1,2],[2,3]],"k":2})");
  EXPECT_EQ(ss.sets.size(), 2u);
  EXPECT_EQ(serialize(parse_set_system(serialize(ss))), serialize(ss));
  const WeightedGraph wg = parse_graph(
      R"({"vertices":["u","v"],"edges":[["u","v",2.5]],"kappa":2})");
  EXPECT_EQ(wg.edges[0].weight, 2.5);
  EXPECT_EQ(serialize(parse_graph(serialize(wg))), serialize(wg));
}

TEST(IoTest, MalformedJsonCarriesPosition) {
  try {
    parse_instance("{\n  \"type\": \"heg\",\n  oops\n}");
    FAIL() << "expected JsonError";
  } catch (const JsonError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 0);
  }
}

TEST(IoTest, WrongFieldTypesAreUsageErrors) {
  EXPECT_THROW(parse_instance(R"({"type":"heg","skills":"x","kappa":1,"agents":[]})"),
               JsonError);
  EXPECT_THROW(parse_instance(R"({"type":"hgcrp"})"), InvalidArgument);
  EXPECT_THROW(parse_random_params(R"({"agents":-1})"), InvalidArgument);
}

TEST(IoTest, TraceSerializationIsDeterministic) {
  const Instance inst = random_heg(9, 3, 3, 3, 5);
  const auto a = imitative_brd(inst, 5);
  const auto b = imitative_brd(inst, 5);
  EXPECT_EQ(serialize(a.trace, inst.agents()), serialize(b.trace, inst.agents()));
}

}  // namespace
}  // namespace heg
