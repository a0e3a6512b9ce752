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

#include "heg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "heg/enumerate.hpp"
#include "json.hpp"

namespace heg {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    int line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw JsonError("malformed JSON at line " + std::to_string(line) +
                        ", column " + std::to_string(column) + ": " +
                        e.what(),
                    line, column);
  }
}

[[noreturn]] void field_error(const std::string& what) {
  throw JsonError(what, 0, 0);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) field_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) field_error(std::string("missing field \"") + key + "\"");
  return *it;
}

template <typename T>
T as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    field_error("field " + what + " has the wrong type");
  }
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) field_error("field " + what + " must be an integer");
  return j.get<int>();
}

double as_number(const Json& j, const std::string& what) {
  if (!j.is_number()) field_error("field " + what + " must be a number");
  return j.get<double>();
}

OrderedJson number(double v) {
  if (v == std::floor(v) && std::fabs(v) < 9007199254740992.0) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

OrderedJson ids(const Coalition& c, std::span<const std::string> agent_ids) {
  OrderedJson out = OrderedJson::array();
  for (AgentIndex i : c) out.push_back(agent_ids[i]);
  return out;
}

OrderedJson partition_json(const Partition& p,
                           std::span<const std::string> agent_ids) {
  OrderedJson coalitions = OrderedJson::array();
  for (const Coalition& c : p.coalitions()) coalitions.push_back(ids(c, agent_ids));
  OrderedJson out;
  out["coalitions"] = std::move(coalitions);
  return out;
}

std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = key.find(',', start);
    parts.push_back(key.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string join_key(std::uint64_t mask, const std::vector<std::string>& agents) {
  std::string key;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    if (!key.empty()) key += ',';
    key += agents[i];
  }
  return key;
}

Instance instance_from_json(const Json& j) {
  if (j.contains("type") && as<std::string>(j["type"], "type") != "heg") {
    field_error("expected \"type\": \"heg\"");
  }
  const auto skills = as<std::vector<std::string>>(require(j, "skills"), "skills");
  const int kappa = as_int(require(j, "kappa"), "kappa");
  const Json& agents = require(j, "agents");
  if (!agents.is_array()) field_error("field agents must be an array");
  std::vector<std::string> agent_ids;
  std::vector<double> expertise;
  for (const Json& a : agents) {
    agent_ids.push_back(as<std::string>(require(a, "id"), "agents[].id"));
    const Json& row = require(a, "expertise");
    if (!row.is_array() || row.size() != skills.size()) {
      field_error("expertise of agent '" + agent_ids.back() + "' must have " +
                  std::to_string(skills.size()) + " entries");
    }
    for (const Json& v : row) expertise.push_back(as_number(v, "expertise"));
  }
  std::optional<int> level_bound;
  if (j.contains("level_bound") && !j["level_bound"].is_null()) {
    level_bound = as_int(j["level_bound"], "level_bound");
  }
  Instance inst(std::move(agent_ids), skills, std::move(expertise), kappa,
                level_bound);
  if (j.contains("meta")) {
    const Json& m = j["meta"];
    ReductionMeta meta;
    meta.source = as<std::string>(require(m, "source"), "meta.source");
    if (m.contains("m")) meta.universe_size = as_int(m["m"], "meta.m");
    meta.original_agents = m.contains("original_agents")
                               ? as_int(m["original_agents"], "meta.original_agents")
                               : inst.num_agents();
    if (m.contains("padding")) {
      for (const Json& id : m["padding"]) {
        meta.padding.push_back(
            inst.agent_index(as<std::string>(id, "meta.padding")));
      }
    }
    inst.set_meta(std::move(meta));
  }
  return inst;
}

HgcrpInstance hgcrp_from_json(const Json& j) {
  if (as<std::string>(require(j, "type"), "type") != "hgcrp") {
    field_error("expected \"type\": \"hgcrp\"");
  }
  auto agents = as<std::vector<std::string>>(require(j, "agents"), "agents");
  const int n = static_cast<int>(agents.size());
  if (n == 0) field_error("game has no agents");
  if (n > HgcrpInstance::kMaxTableAgents) {
    field_error("utility tables support at most " +
                std::to_string(HgcrpInstance::kMaxTableAgents) + " agents");
  }
  const int kappa = j.contains("kappa") ? as_int(j["kappa"], "kappa") : n;
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[agents[i]] = i;

  const Json& utilities = require(j, "utilities");
  if (!utilities.is_object()) field_error("field utilities must be an object");
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<double> table(size, 0.0);
  std::vector<bool> seen(size, false);
  for (const auto& [key, value] : utilities.items()) {
    std::uint64_t mask = 0;
    for (const std::string& id : split_key(key)) {
      auto it = index.find(id);
      if (it == index.end()) {
        throw InvalidReference("utility key '" + key + "' names unknown agent '" +
                               id + "'");
      }
      mask |= std::uint64_t{1} << it->second;
    }
    if (seen[mask]) field_error("coalition '" + key + "' listed twice");
    seen[mask] = true;
    table[mask] = as_number(value, "utilities[\"" + key + "\"]");
  }
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (!seen[mask]) {
      field_error("utilities miss coalition '" + join_key(mask, agents) + "'");
    }
  }
  return HgcrpInstance::from_table(std::move(agents), kappa, std::move(table));
}

}  // namespace

Instance parse_instance(std::string_view text) {
  return instance_from_json(parse_text(text));
}

HgcrpInstance parse_hgcrp(std::string_view text) {
  return hgcrp_from_json(parse_text(text));
}

std::variant<Instance, HgcrpInstance> parse_game(std::string_view text) {
  const Json j = parse_text(text);
  if (j.is_object() && j.contains("type") && j["type"] == "hgcrp") {
    return hgcrp_from_json(j);
  }
  return instance_from_json(j);
}

Partition parse_partition(std::string_view text,
                          std::span<const std::string> agent_ids, int kappa) {
  const Json j = parse_text(text);
  const Json& coalitions = require(j, "coalitions");
  if (!coalitions.is_array()) field_error("field coalitions must be an array");
  std::unordered_map<std::string, AgentIndex> index;
  for (std::size_t i = 0; i < agent_ids.size(); ++i) {
    index[agent_ids[i]] = static_cast<AgentIndex>(i);
  }
  std::vector<Coalition> cs;
  for (const Json& c : coalitions) {
    std::vector<AgentIndex> members;
    for (const auto& id : as<std::vector<std::string>>(c, "coalitions[]")) {
      auto it = index.find(id);
      if (it == index.end()) {
        throw InvalidReference("unknown agent '" + id + "'");
      }
      members.push_back(it->second);
    }
    try {
      cs.emplace_back(std::move(members));
    } catch (const InvalidArgument& e) {
      throw InvalidPartition(e.what());
    }
  }
  return Partition(std::move(cs), static_cast<int>(agent_ids.size()), kappa);
}

SetSystem parse_set_system(std::string_view text) {
  const Json j = parse_text(text);
  SetSystem ss;
  ss.universe_size = as_int(require(j, "m"), "m");
  ss.sets = as<std::vector<std::vector<int>>>(require(j, "sets"), "sets");
  ss.k = as_int(require(j, "k"), "k");
  validate(ss);
  return ss;
}

WeightedGraph parse_graph(std::string_view text) {
  const Json j = parse_text(text);
  WeightedGraph wg;
  wg.vertices = as<std::vector<std::string>>(require(j, "vertices"), "vertices");
  wg.kappa = as_int(require(j, "kappa"), "kappa");
  const Json& edges = require(j, "edges");
  if (!edges.is_array()) field_error("field edges must be an array");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 3) {
      field_error("each edge must be [\"u\", \"v\", weight]");
    }
    wg.edges.push_back({as<std::string>(e[0], "edges[][0]"),
                        as<std::string>(e[1], "edges[][1]"),
                        as_number(e[2], "edges[][2]")});
  }
  validate(wg);
  return wg;
}

RandomParams parse_random_params(std::string_view text) {
  const Json j = parse_text(text);
  RandomParams params;
  params.agents = as_int(require(j, "agents"), "agents");
  params.skills = as_int(require(j, "skills"), "skills");
  params.kappa = as_int(require(j, "kappa"), "kappa");
  if (j.contains("beta") && !j["beta"].is_null()) {
    params.beta = as_int(j["beta"], "beta");
  }
  if (j.contains("density")) params.density = as_number(j["density"], "density");
  return params;
}

std::string serialize(const Instance& inst) {
  OrderedJson j;
  j["type"] = "heg";
  j["skills"] = inst.skills();
  j["kappa"] = inst.kappa();
  if (inst.level_bound()) j["level_bound"] = *inst.level_bound();
  OrderedJson agents = OrderedJson::array();
  for (AgentIndex i = 0; i < inst.num_agents(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (double v : inst.row(i)) row.push_back(number(v));
    OrderedJson a;
    a["id"] = inst.agent_id(i);
    a["expertise"] = std::move(row);
    agents.push_back(std::move(a));
  }
  j["agents"] = std::move(agents);
  if (const auto& meta = inst.meta()) {
    OrderedJson m;
    m["source"] = meta->source;
    m["m"] = meta->universe_size;
    m["original_agents"] = meta->original_agents;
    OrderedJson padding = OrderedJson::array();
    for (AgentIndex i : meta->padding) padding.push_back(inst.agent_id(i));
    m["padding"] = std::move(padding);
    j["meta"] = std::move(m);
  }
  return dump(j);
}

std::string serialize(const HgcrpInstance& g) {
  if (!g.has_table()) {
    throw InvalidArgument("only table-backed games can be serialized");
  }
  OrderedJson j;
  j["type"] = "hgcrp";
  j["agents"] = g.agents();
  j["kappa"] = g.kappa();
  OrderedJson utilities = OrderedJson::object();
  const int n = g.num_agents();
  // Keys in canonical subset order.
  std::vector<AgentIndex> everyone(static_cast<std::size_t>(n));
  for (AgentIndex i = 0; i < n; ++i) everyone[i] = i;
  for_each_subset(everyone, n, [&](std::span<const AgentIndex> c) {
    std::string key;
    for (AgentIndex i : c) {
      if (!key.empty()) key += ',';
      key += g.agent_id(i);
    }
    utilities[key] = number(g.utility(c));
    return false;
  });
  j["utilities"] = std::move(utilities);
  return dump(j);
}

std::string serialize(const Partition& p,
                      std::span<const std::string> agent_ids) {
  return dump(partition_json(p, agent_ids));
}

std::string serialize(const SetSystem& ss) {
  OrderedJson j;
  j["m"] = ss.universe_size;
  j["sets"] = ss.sets;
  j["k"] = ss.k;
  return dump(j);
}

std::string serialize(const WeightedGraph& wg) {
  OrderedJson j;
  j["vertices"] = wg.vertices;
  OrderedJson edges = OrderedJson::array();
  for (const auto& e : wg.edges) {
    edges.push_back(OrderedJson::array({e.u, e.v, number(e.weight)}));
  }
  j["edges"] = std::move(edges);
  j["kappa"] = wg.kappa;
  return dump(j);
}

std::string serialize(const StabilityReport& report,
                      std::span<const std::string> agent_ids) {
  OrderedJson j;
  j["property"] = std::string(to_string(report.property));
  if (report.property == Property::ApproxCS) j["alpha"] = report.alpha;
  j["holds"] = report.holds;
  if (report.witness) {
    OrderedJson w = OrderedJson::object();
    if (report.witness->agent) w["agent"] = agent_ids[*report.witness->agent];
    if (report.witness->coalition) {
      w["coalition"] = ids(*report.witness->coalition, agent_ids);
    }
    if (report.witness->partition) {
      w["partition"] = partition_json(*report.witness->partition, agent_ids);
    }
    j["witness"] = std::move(w);
  }
  return dump(j);
}

std::string serialize(const MoveTrace& trace,
                      std::span<const std::string> agent_ids) {
  OrderedJson j;
  j["seed"] = trace.seed;
  j["move_bound"] = trace.move_bound ? OrderedJson(*trace.move_bound)
                                     : OrderedJson(nullptr);
  OrderedJson steps = OrderedJson::array();
  for (const MoveStep& s : trace.steps) {
    OrderedJson step;
    switch (s.kind) {
      case StepKind::BetterResponse: step["kind"] = "BetterResponse"; break;
      case StepKind::Imitation: step["kind"] = "Imitation"; break;
      case StepKind::CisSwap: step["kind"] = "CisSwap"; break;
    }
    step["agent"] = agent_ids[s.agent];
    if (s.partner) step["partner"] = agent_ids[*s.partner];
    if (s.slot) step["slot"] = *s.slot;
    step["from"] = ids(s.from, agent_ids);
    step["to"] = ids(s.to, agent_ids);
    step["utility_before"] = number(s.utility_before);
    step["utility_after"] = number(s.utility_after);
    if (s.gamma_before) step["gamma_before"] = *s.gamma_before;
    if (s.gamma_after) step["gamma_after"] = *s.gamma_after;
    OrderedJson psi = OrderedJson::array();
    for (double v : s.psi_after.values()) psi.push_back(number(v));
    step["psi_after"] = std::move(psi);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return dump(j);
}

}  // namespace heg
