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

#ifndef HEG_INSTANCE_HPP
#define HEG_INSTANCE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "heg/partition.hpp"

namespace heg {

using SkillIndex = int;

/// Provenance recorded by the reduction generators. Padding agents are the
/// all-ones agents added by the set-cover reduction.
struct ReductionMeta {
  std::string source;
  int universe_size = 0;
  int original_agents = 0;
  std::vector<AgentIndex> padding;

  friend bool operator==(const ReductionMeta&, const ReductionMeta&) = default;
};

/// A hedonic expertise game (N, S, e, kappa).
///
/// Expertise is stored row-major as doubles. When every value is an integer
/// the instance is "integral" and carries a level bound beta; all sums stay
/// exact in that case and comparisons are made without tolerance.
class Instance {
 public:
  /// `expertise` has agents.size() * skills.size() entries, row per agent.
  /// When `level_bound` is empty it is inferred as the maximum value if every
  /// value is an integer. Throws InvalidArgument on violated invariants.
  Instance(std::vector<std::string> agents, std::vector<std::string> skills,
           std::vector<double> expertise, int kappa,
           std::optional<int> level_bound = std::nullopt);

  int num_agents() const { return static_cast<int>(agents_.size()); }
  int num_skills() const { return static_cast<int>(skills_.size()); }
  int kappa() const { return kappa_; }
  std::optional<int> level_bound() const { return level_bound_; }
  bool integral() const { return level_bound_.has_value(); }

  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& skills() const { return skills_; }
  const std::string& agent_id(AgentIndex i) const { return agents_.at(i); }

  /// Throws InvalidReference for unknown ids.
  AgentIndex agent_index(std::string_view id) const;
  SkillIndex skill_index(std::string_view id) const;

  double expertise(AgentIndex i, SkillIndex s) const {
    return expertise_[static_cast<std::size_t>(i) * skills_.size() + s];
  }
  std::span<const double> row(AgentIndex i) const {
    return {expertise_.data() + static_cast<std::size_t>(i) * skills_.size(),
            skills_.size()};
  }

  const std::optional<ReductionMeta>& meta() const { return meta_; }
  void set_meta(ReductionMeta meta) { meta_ = std::move(meta); }

  /// Tolerance for strict comparisons: 0 for integral instances.
  double epsilon() const { return integral() ? 0.0 : epsilon_; }
  void set_epsilon(double eps) { epsilon_ = eps; }

 private:
  std::vector<std::string> agents_;
  std::vector<std::string> skills_;
  std::vector<double> expertise_;
  int kappa_;
  std::optional<int> level_bound_;
  std::optional<ReductionMeta> meta_;
  std::unordered_map<std::string, AgentIndex> agent_lookup_;
  std::unordered_map<std::string, SkillIndex> skill_lookup_;
  double epsilon_ = 1e-9;
};

/// E_C(s): the maximum expertise of a member of `c` in skill `s`, 0 for an
/// empty coalition.
double joint_expertise(const Instance& inst, const Coalition& c, SkillIndex s);
double joint_expertise(const Instance& inst, const Coalition& c,
                       std::string_view skill);

/// U(C) = sum over skills of E_C(s). U(empty) = 0.
double joint_utility(const Instance& inst, std::span<const AgentIndex> c);
inline double joint_utility(const Instance& inst, const Coalition& c) {
  return joint_utility(inst, c.members());
}

/// U(C + x) - U(C) computed as sum over skills of max(e_x(s) - E_C(s), 0).
/// Throws InvalidArgument if x is already in c.
double marginal_gain(const Instance& inst, const Coalition& c, AgentIndex x);

/// u_i(pi) = U(pi(i)). Throws InvalidPartition if the partition does not
/// belong to this instance.
double agent_utility(const Instance& inst, const Partition& p, AgentIndex i);

/// Strict a > b under tolerance eps.
inline bool strictly_greater(double a, double b, double eps) {
  return a > b + eps;
}

}  // namespace heg

#endif  // HEG_INSTANCE_HPP
