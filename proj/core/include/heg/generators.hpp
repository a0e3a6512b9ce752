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

#ifndef HEG_GENERATORS_HPP
#define HEG_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heg/hgcrp.hpp"
#include "heg/instance.hpp"
#include "heg/partition.hpp"

namespace heg {

/// A universe {1..m}, a family of subsets of it, and a budget k.
struct SetSystem {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;
  int k = 1;
};

struct WeightedEdge {
  std::string u;
  std::string v;
  double weight = 0;
};

struct WeightedGraph {
  std::vector<std::string> vertices;
  std::vector<WeightedEdge> edges;
  int kappa = 1;
};

/// Throws InvalidArgument if a set leaves the universe or k < 1.
void validate(const SetSystem& ss);
/// Throws InvalidArgument on self-loops, unknown endpoints, negative weights
/// or duplicate edges.
void validate(const WeightedGraph& wg);

/// Max-coverage reduction: one skill per universe element, agent a_i has
/// expertise 1 exactly on the elements of set i, kappa = k. Joint utility
/// equals coverage. An empty family yields no agents and is rejected.
Instance from_max_coverage(const SetSystem& ss);

/// x = ceil((n - k) / (k - 1)) padding agents for the set-cover reduction.
int set_cover_padding(int n, int k);

/// Set-cover reduction: the max-coverage instance plus x all-ones padding
/// agents. Requires k >= 2 and n >= k. Padding agents are recorded in meta.
Instance from_set_cover(const SetSystem& ss);

/// Partition (X_1, ..., X_x, C) with padding agent i anchoring X_i, C free of
/// padding agents and U(C) < m. nullopt when every candidate C is a cover.
/// Throws InvalidArgument when the instance has no set-cover metadata.
std::optional<Partition> hardness_witness_partition(const Instance& inst);

/// Hedonic vertex cover game as an HEG: one skill per edge, a vertex's
/// expertise in an edge is the edge weight when incident, 0 otherwise.
Instance from_graph(const WeightedGraph& wg);

struct RandomParams {
  int agents = 6;
  int skills = 3;
  int kappa = 2;
  /// Integer levels in {1..beta} when set, otherwise reals in (0, 1].
  std::optional<int> beta;
  /// Probability that an entry is non-zero.
  double density = 1.0;
  std::uint64_t seed = 0;
};

Instance random_instance(const RandomParams& params);

/// Random graph on `vertices` vertices: each pair gets an edge with
/// probability `edge_probability`, weights integers in {1..max_weight} or
/// reals in (0, 1] when max_weight is empty.
WeightedGraph random_graph(int vertices, double edge_probability,
                           std::optional<int> max_weight, int kappa,
                           std::uint64_t seed);

/// Random family of `sets` subsets of {1..m}.
SetSystem random_set_system(int m, int sets, int k, double density,
                            std::uint64_t seed);

enum class TableFamily {
  WeightedCoverage,  // integer weights on random element sets
  ConcaveOfModular,  // sqrt of a positive additive function
  BudgetAdditive,    // min(budget, additive)
};

/// Table-backed monotone submodular game drawn from `family`.
HgcrpInstance random_submodular_table(int agents, int kappa,
                                      TableFamily family, std::uint64_t seed);

}  // namespace heg

#endif  // HEG_GENERATORS_HPP
