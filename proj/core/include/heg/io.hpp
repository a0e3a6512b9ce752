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

#ifndef HEG_IO_HPP
#define HEG_IO_HPP

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "heg/algorithms.hpp"
#include "heg/errors.hpp"
#include "heg/generators.hpp"
#include "heg/hgcrp.hpp"
#include "heg/instance.hpp"
#include "heg/partition.hpp"
#include "heg/stability.hpp"

namespace heg {

/// Malformed or ill-typed JSON. Line and column are 1-based; both are 0 when
/// the text parsed but a field was wrong.
class JsonError : public InvalidArgument {
 public:
  JsonError(const std::string& what, int line, int column)
      : InvalidArgument(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Instance:   {"type":"heg","skills":[...],"kappa":K,
//              "agents":[{"id":"a1","expertise":[...]}, ...]}
//             optional "level_bound":B and reserved "meta":{...}.
// HGCRP:      {"type":"hgcrp","agents":[...],"kappa":K,
//              "utilities":{"1":1,"1,2":2,"2":3}}; kappa defaults to |N|.
// Partition:  {"coalitions":[["a1","a2"],["a3"]]}
// SetSystem:  {"m":M,"sets":[[...]],"k":K}
// Graph:      {"vertices":[...],"edges":[["u","v",w]],"kappa":K}

Instance parse_instance(std::string_view text);
HgcrpInstance parse_hgcrp(std::string_view text);
/// Dispatches on "type".
std::variant<Instance, HgcrpInstance> parse_game(std::string_view text);

Partition parse_partition(std::string_view text,
                          std::span<const std::string> agent_ids, int kappa);
SetSystem parse_set_system(std::string_view text);
WeightedGraph parse_graph(std::string_view text);
/// {"agents":N,"skills":S,"kappa":K,"beta":B|null,"density":D}; the seed is
/// supplied separately.
RandomParams parse_random_params(std::string_view text);

std::string serialize(const Instance& inst);
/// Table-backed games only.
std::string serialize(const HgcrpInstance& g);
std::string serialize(const Partition& p,
                      std::span<const std::string> agent_ids);
std::string serialize(const SetSystem& ss);
std::string serialize(const WeightedGraph& wg);
std::string serialize(const StabilityReport& report,
                      std::span<const std::string> agent_ids);
std::string serialize(const MoveTrace& trace,
                      std::span<const std::string> agent_ids);

}  // namespace heg

#endif  // HEG_IO_HPP
