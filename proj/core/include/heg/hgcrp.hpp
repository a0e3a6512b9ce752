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

#ifndef HEG_HGCRP_HPP
#define HEG_HGCRP_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "heg/instance.hpp"
#include "heg/limits.hpp"
#include "heg/partition.hpp"

namespace heg {

/// A hedonic game with common ranking property (N, U, kappa): every member of
/// a coalition receives the coalition's joint utility.
///
/// The joint utility is either an explicit table indexed by the bitmask of
/// the coalition, or a callable supplied by another module (the HEG adapter
/// being the main one).
class HgcrpInstance {
 public:
  using UtilityFn = std::function<double(std::span<const AgentIndex>)>;

  /// Table form: `table[mask]` is U of the coalition whose members are the
  /// set bits of `mask`; table.size() must be 2^agents.size() and table[0]
  /// must be 0. At most kMaxTableAgents agents.
  static HgcrpInstance from_table(std::vector<std::string> agents, int kappa,
                                  std::vector<double> table);

  /// Oracle form. `integral` promises every utility is an integer, which
  /// makes comparisons exact.
  static HgcrpInstance from_oracle(std::vector<std::string> agents, int kappa,
                                   UtilityFn utility, bool integral);

  /// Adapter over an HEG instance; monotone and submodular by construction.
  static HgcrpInstance from_heg(const Instance& inst);

  static constexpr int kMaxTableAgents = 20;

  int num_agents() const { return static_cast<int>(agents_.size()); }
  int kappa() const { return kappa_; }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::string& agent_id(AgentIndex i) const { return agents_.at(i); }
  AgentIndex agent_index(std::string_view id) const;

  /// U(C); U(empty) = 0.
  double utility(std::span<const AgentIndex> c) const;
  double utility(const Coalition& c) const { return utility(c.members()); }
  double utility_of_mask(std::uint64_t mask) const;

  bool has_table() const { return !table_.empty(); }
  std::span<const double> table() const { return table_; }
  /// The backing HEG instance, if built with from_heg.
  const Instance* heg() const { return heg_.get(); }

  bool integral() const { return integral_; }
  double epsilon() const { return integral_ ? 0.0 : epsilon_; }
  /// Tolerance for comparisons that leave the integers (e.g. alpha * U).
  double float_epsilon() const { return epsilon_; }
  void set_epsilon(double eps) { epsilon_ = eps; }

  /// Verification flags; empty until checked (or known by construction).
  std::optional<bool> monotone() const { return monotone_; }
  std::optional<bool> submodular() const { return submodular_; }
  void set_verified(bool monotone, bool submodular) {
    monotone_ = monotone;
    submodular_ = submodular;
  }

 private:
  HgcrpInstance() = default;

  std::vector<std::string> agents_;
  std::unordered_map<std::string, AgentIndex> lookup_;
  int kappa_ = 1;
  std::vector<double> table_;
  UtilityFn utility_;
  std::shared_ptr<const Instance> heg_;
  bool integral_ = false;
  double epsilon_ = 1e-9;
  std::optional<bool> monotone_;
  std::optional<bool> submodular_;
};

struct SubmodularityViolation {
  enum class Kind { Monotonicity, Submodularity };
  Kind kind;
  Coalition smaller;  // X
  Coalition larger;   // Y, with X a subset of Y
  std::optional<AgentIndex> added;  // x, not in Y (submodularity only)
};

struct SubmodularityReport {
  bool monotone = true;
  bool submodular = true;
  std::optional<SubmodularityViolation> counterexample;
  /// Number of (X, Y, x) triples examined.
  std::uint64_t triples = 0;
};

/// Exhaustive check over all X subset of Y and x outside Y. Table-backed
/// games are always checked; oracle-backed games only up to
/// limits.submodularity_limit agents (CapabilityError beyond).
SubmodularityReport check_monotone_submodular(const HgcrpInstance& g,
                                              const Limits& limits = {});

/// Sampled variant: `triples` random (X, Y, x) with X a subset of Y.
SubmodularityReport sample_monotone_submodular(const HgcrpInstance& g,
                                               std::uint64_t triples,
                                               std::uint64_t seed);

/// psi(pi): all agents' utilities, sorted non-increasing.
class PotentialVector {
 public:
  PotentialVector() = default;
  /// Sorts `values` non-increasing.
  explicit PotentialVector(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }

  friend bool operator==(const PotentialVector&,
                         const PotentialVector&) = default;

 private:
  std::vector<double> values_;
};

enum class LexOrder { Less, Equal, Greater };

/// Lexicographic comparison; Greater means a is lexicographically greater
/// than b. Entries within eps of each other compare equal. Throws
/// InvalidArgument on length mismatch.
LexOrder lex_compare(const PotentialVector& a, const PotentialVector& b,
                     double eps = 0.0);

PotentialVector psi(const HgcrpInstance& g, const Partition& p);
PotentialVector psi(const Instance& inst, const Partition& p);

/// pi_C: agents of `c` leave their coalitions and form `c`; emptied
/// coalitions are dropped.
Partition induced_partition(const Partition& p, const Coalition& c);

/// Partition with lexicographically maximal psi over all feasible
/// partitions; ties go to the canonically-first partition. Throws
/// CapabilityError above limits.partition_limit agents.
Partition psi_maximal_partition(const HgcrpInstance& g,
                                const Limits& limits = {});

}  // namespace heg

#endif  // HEG_HGCRP_HPP
