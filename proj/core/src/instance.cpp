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

#include "heg/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heg/errors.hpp"

namespace heg {

Instance::Instance(std::vector<std::string> agents,
                   std::vector<std::string> skills,
                   std::vector<double> expertise, int kappa,
                   std::optional<int> level_bound)
    : agents_(std::move(agents)),
      skills_(std::move(skills)),
      expertise_(std::move(expertise)),
      kappa_(kappa),
      level_bound_(level_bound) {
  if (agents_.empty()) throw InvalidArgument("instance has no agents");
  if (kappa_ < 1) throw InvalidArgument("kappa must be at least 1");
  if (expertise_.size() != agents_.size() * skills_.size()) {
    throw InvalidArgument("expertise matrix has " +
                          std::to_string(expertise_.size()) +
                          " entries, expected " +
                          std::to_string(agents_.size() * skills_.size()));
  }
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (!agent_lookup_.emplace(agents_[i], static_cast<AgentIndex>(i)).second) {
      throw InvalidArgument("duplicate agent id '" + agents_[i] + "'");
    }
  }
  for (std::size_t s = 0; s < skills_.size(); ++s) {
    if (!skill_lookup_.emplace(skills_[s], static_cast<SkillIndex>(s)).second) {
      throw InvalidArgument("duplicate skill id '" + skills_[s] + "'");
    }
  }
  bool all_integer = true;
  double max_value = 0;
  for (double v : expertise_) {
    if (!std::isfinite(v) || v < 0) {
      throw InvalidArgument("expertise values must be finite and >= 0");
    }
    all_integer = all_integer && v == std::floor(v);
    max_value = std::max(max_value, v);
  }
  if (level_bound_) {
    if (*level_bound_ < 0) throw InvalidArgument("level bound must be >= 0");
    if (!all_integer || max_value > *level_bound_) {
      throw InvalidArgument("expertise values must be integers in [0, " +
                            std::to_string(*level_bound_) + "]");
    }
  } else if (all_integer && max_value <= 1e9) {
    level_bound_ = static_cast<int>(max_value);
  }
}

AgentIndex Instance::agent_index(std::string_view id) const {
  auto it = agent_lookup_.find(std::string(id));
  if (it == agent_lookup_.end()) {
    throw InvalidReference("unknown agent '" + std::string(id) + "'");
  }
  return it->second;
}

SkillIndex Instance::skill_index(std::string_view id) const {
  auto it = skill_lookup_.find(std::string(id));
  if (it == skill_lookup_.end()) {
    throw InvalidReference("unknown skill '" + std::string(id) + "'");
  }
  return it->second;
}

namespace {

void check_members(const Instance& inst, std::span<const AgentIndex> c) {
  for (AgentIndex i : c) {
    if (i < 0 || i >= inst.num_agents()) {
      throw InvalidReference("agent index " + std::to_string(i) +
                             " out of range");
    }
  }
}

}  // namespace

double joint_expertise(const Instance& inst, const Coalition& c,
                       SkillIndex s) {
  if (s < 0 || s >= inst.num_skills()) {
    throw InvalidReference("skill index " + std::to_string(s) +
                           " out of range");
  }
  check_members(inst, c.members());
  double best = 0;
  for (AgentIndex i : c) best = std::max(best, inst.expertise(i, s));
  return best;
}

double joint_expertise(const Instance& inst, const Coalition& c,
                       std::string_view skill) {
  return joint_expertise(inst, c, inst.skill_index(skill));
}

double joint_utility(const Instance& inst, std::span<const AgentIndex> c) {
  if (c.empty()) return 0;
  check_members(inst, c);
  const int skills = inst.num_skills();
  double total = 0;
  for (SkillIndex s = 0; s < skills; ++s) {
    double best = 0;
    for (AgentIndex i : c) best = std::max(best, inst.expertise(i, s));
    total += best;
  }
  return total;
}

double marginal_gain(const Instance& inst, const Coalition& c, AgentIndex x) {
  check_members(inst, c.members());
  check_members(inst, std::span<const AgentIndex>(&x, 1));
  if (c.contains(x)) {
    throw InvalidArgument("agent " + inst.agent_id(x) +
                          " is already in the coalition");
  }
  double gain = 0;
  for (SkillIndex s = 0; s < inst.num_skills(); ++s) {
    double base = 0;
    for (AgentIndex i : c) base = std::max(base, inst.expertise(i, s));
    gain += std::max(inst.expertise(x, s) - base, 0.0);
  }
  return gain;
}

double agent_utility(const Instance& inst, const Partition& p, AgentIndex i) {
  if (p.num_agents() != inst.num_agents()) {
    throw InvalidPartition("partition covers " +
                           std::to_string(p.num_agents()) + " agents, instance has " +
                           std::to_string(inst.num_agents()));
  }
  return joint_utility(inst, p.coalition_of(i));
}

}  // namespace heg
