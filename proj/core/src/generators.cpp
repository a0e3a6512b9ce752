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

#include "heg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_map>

#include "heg/errors.hpp"
#include "heg/random.hpp"

namespace heg {
namespace {

std::vector<std::string> numbered(const std::string& prefix, int count,
                                  int first = 1) {
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) ids.push_back(prefix + std::to_string(first + i));
  return ids;
}

std::vector<double> incidence(const SetSystem& ss) {
  const std::size_t m = static_cast<std::size_t>(ss.universe_size);
  std::vector<double> e(ss.sets.size() * m, 0.0);
  for (std::size_t i = 0; i < ss.sets.size(); ++i) {
    for (int element : ss.sets[i]) e[i * m + (element - 1)] = 1.0;
  }
  return e;
}

}  // namespace

void validate(const SetSystem& ss) {
  if (ss.universe_size < 0) throw InvalidArgument("universe size must be >= 0");
  if (ss.k < 1) throw InvalidArgument("k must be at least 1");
  for (const auto& set : ss.sets) {
    for (int element : set) {
      if (element < 1 || element > ss.universe_size) {
        throw InvalidArgument("set element " + std::to_string(element) +
                              " outside universe {1.." +
                              std::to_string(ss.universe_size) + "}");
      }
    }
  }
}

void validate(const WeightedGraph& wg) {
  if (wg.kappa < 1) throw InvalidArgument("kappa must be at least 1");
  std::set<std::string> vertices;
  for (const auto& v : wg.vertices) {
    if (!vertices.insert(v).second) {
      throw InvalidArgument("duplicate vertex '" + v + "'");
    }
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : wg.edges) {
    if (!vertices.count(e.u) || !vertices.count(e.v)) {
      throw InvalidArgument("edge " + e.u + "-" + e.v +
                            " has an unknown endpoint");
    }
    if (e.u == e.v) throw InvalidArgument("self-loop at '" + e.u + "'");
    if (!std::isfinite(e.weight) || e.weight < 0) {
      throw InvalidArgument("edge weights must be finite and >= 0");
    }
    auto key = std::minmax(e.u, e.v);
    if (!seen.emplace(key.first, key.second).second) {
      throw InvalidArgument("duplicate edge " + e.u + "-" + e.v);
    }
  }
}

Instance from_max_coverage(const SetSystem& ss) {
  validate(ss);
  const int n = static_cast<int>(ss.sets.size());
  Instance inst(numbered("a", n), numbered("s", ss.universe_size),
                incidence(ss), ss.k, 1);
  inst.set_meta(ReductionMeta{"max-coverage", ss.universe_size, n, {}});
  return inst;
}

int set_cover_padding(int n, int k) {
  if (k < 2) throw InvalidArgument("set-cover reduction needs k >= 2");
  if (n < k) throw InvalidArgument("set-cover reduction needs n >= k");
  return (n - k + k - 2) / (k - 1);
}

Instance from_set_cover(const SetSystem& ss) {
  validate(ss);
  const int n = static_cast<int>(ss.sets.size());
  const int x = set_cover_padding(n, ss.k);
  std::vector<double> e = incidence(ss);
  e.insert(e.end(), static_cast<std::size_t>(x) * ss.universe_size, 1.0);
  Instance inst(numbered("a", n + x), numbered("s", ss.universe_size),
                std::move(e), ss.k, 1);
  ReductionMeta meta{"set-cover", ss.universe_size, n, {}};
  for (int i = 0; i < x; ++i) meta.padding.push_back(n + i);
  inst.set_meta(std::move(meta));
  return inst;
}

std::optional<Partition> hardness_witness_partition(const Instance& inst) {
  const auto& meta = inst.meta();
  if (!meta || meta->source != "set-cover") {
    throw InvalidArgument(
        "hardness witness needs an instance from the set-cover reduction");
  }
  const int n = meta->original_agents;
  const int x = static_cast<int>(meta->padding.size());
  const int k = inst.kappa();
  const int m = meta->universe_size;
  const int c_size = n - x * (k - 1);
  if (c_size < 1 || c_size > n) return std::nullopt;

  std::vector<int> comb(static_cast<std::size_t>(c_size));
  for (int i = 0; i < c_size; ++i) comb[i] = i;
  for (;;) {
    if (joint_utility(inst, comb) < m) {
      std::vector<Coalition> coalitions{Coalition(comb)};
      std::vector<AgentIndex> rest;
      for (AgentIndex i = 0; i < n; ++i) {
        if (!std::binary_search(comb.begin(), comb.end(), i)) rest.push_back(i);
      }
      std::size_t next = 0;
      for (int p = 0; p < x; ++p) {
        std::vector<AgentIndex> block{meta->padding[p]};
        for (int t = 0; t < k - 1 && next < rest.size(); ++t) {
          block.push_back(rest[next++]);
        }
        coalitions.emplace_back(std::move(block));
      }
      return Partition(std::move(coalitions), inst.num_agents(), k);
    }
    int i = c_size - 1;
    while (i >= 0 && comb[i] == n - c_size + i) --i;
    if (i < 0) return std::nullopt;
    ++comb[i];
    for (int j = i + 1; j < c_size; ++j) comb[j] = comb[j - 1] + 1;
  }
}

Instance from_graph(const WeightedGraph& wg) {
  validate(wg);
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < wg.vertices.size(); ++i) {
    index[wg.vertices[i]] = static_cast<int>(i);
  }
  const std::size_t skills = wg.edges.size();
  std::vector<std::string> skill_ids;
  std::vector<double> e(wg.vertices.size() * skills, 0.0);
  for (std::size_t s = 0; s < skills; ++s) {
    const WeightedEdge& edge = wg.edges[s];
    auto [u, v] = std::minmax(edge.u, edge.v);
    skill_ids.push_back(u + "-" + v);
    e[index[edge.u] * skills + s] = edge.weight;
    e[index[edge.v] * skills + s] = edge.weight;
  }
  Instance inst(wg.vertices, std::move(skill_ids), std::move(e), wg.kappa);
  inst.set_meta(ReductionMeta{"hvcg", 0, static_cast<int>(wg.vertices.size()),
                              {}});
  return inst;
}

Instance random_instance(const RandomParams& params) {
  if (params.agents < 1 || params.skills < 0 || params.kappa < 1) {
    throw InvalidArgument("random instance needs agents >= 1, skills >= 0 "
                          "and kappa >= 1");
  }
  if (params.beta && *params.beta < 1) {
    throw InvalidArgument("beta must be at least 1");
  }
  if (!(params.density >= 0.0 && params.density <= 1.0)) {
    throw InvalidArgument("density must lie in [0, 1]");
  }
  Rng rng(params.seed);
  std::vector<double> e(static_cast<std::size_t>(params.agents) *
                        static_cast<std::size_t>(params.skills));
  for (double& v : e) {
    if (!rng.chance(params.density)) {
      v = 0.0;
    } else if (params.beta) {
      v = static_cast<double>(rng.between(1, *params.beta));
    } else {
      v = 1.0 - rng.unit();
    }
  }
  return Instance(numbered("a", params.agents), numbered("s", params.skills),
                  std::move(e), params.kappa, params.beta);
}

WeightedGraph random_graph(int vertices, double edge_probability,
                           std::optional<int> max_weight, int kappa,
                           std::uint64_t seed) {
  Rng rng(seed);
  WeightedGraph wg;
  wg.vertices = numbered("v", vertices);
  wg.kappa = kappa;
  for (int i = 0; i < vertices; ++i) {
    for (int j = i + 1; j < vertices; ++j) {
      if (!rng.chance(edge_probability)) continue;
      const double w = max_weight
                           ? static_cast<double>(rng.between(1, *max_weight))
                           : 1.0 - rng.unit();
      wg.edges.push_back({wg.vertices[i], wg.vertices[j], w});
    }
  }
  validate(wg);
  return wg;
}

SetSystem random_set_system(int m, int sets, int k, double density,
                            std::uint64_t seed) {
  Rng rng(seed);
  SetSystem ss{m, {}, k};
  for (int i = 0; i < sets; ++i) {
    std::vector<int> set;
    for (int element = 1; element <= m; ++element) {
      if (rng.chance(density)) set.push_back(element);
    }
    ss.sets.push_back(std::move(set));
  }
  validate(ss);
  return ss;
}

HgcrpInstance random_submodular_table(int agents, int kappa,
                                      TableFamily family, std::uint64_t seed) {
  if (agents < 1 || agents > HgcrpInstance::kMaxTableAgents) {
    throw InvalidArgument("table games need 1.." +
                          std::to_string(HgcrpInstance::kMaxTableAgents) +
                          " agents");
  }
  Rng rng(seed);
  const std::uint64_t size = std::uint64_t{1} << agents;
  std::vector<double> table(size, 0.0);
  switch (family) {
    case TableFamily::WeightedCoverage: {
      const int elements = 2 * agents;
      std::vector<double> weight(static_cast<std::size_t>(elements));
      for (double& w : weight) w = static_cast<double>(rng.between(1, 5));
      std::vector<std::uint64_t> covers(static_cast<std::size_t>(agents));
      for (auto& c : covers) {
        for (int g = 0; g < elements; ++g) {
          if (rng.chance(0.35)) c |= std::uint64_t{1} << g;
        }
      }
      for (std::uint64_t mask = 1; mask < size; ++mask) {
        std::uint64_t covered = 0;
        for (int i = 0; i < agents; ++i) {
          if (mask >> i & 1) covered |= covers[i];
        }
        double total = 0;
        for (int g = 0; g < elements; ++g) {
          if (covered >> g & 1) total += weight[g];
        }
        table[mask] = total;
      }
      break;
    }
    case TableFamily::ConcaveOfModular:
    case TableFamily::BudgetAdditive: {
      const bool concave = family == TableFamily::ConcaveOfModular;
      std::vector<double> weight(static_cast<std::size_t>(agents));
      for (double& w : weight) {
        w = concave ? 1.0 - rng.unit() : static_cast<double>(rng.between(1, 5));
      }
      const double budget = static_cast<double>(rng.between(3, 3 * agents));
      for (std::uint64_t mask = 1; mask < size; ++mask) {
        double total = 0;
        for (int i = 0; i < agents; ++i) {
          if (mask >> i & 1) total += weight[i];
        }
        table[mask] = concave ? std::sqrt(total) : std::min(budget, total);
      }
      break;
    }
  }
  return HgcrpInstance::from_table(numbered("", agents), kappa,
                                   std::move(table));
}

}  // namespace heg
