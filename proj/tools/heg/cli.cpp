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

#include "heg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "heg/algorithms.hpp"
#include "heg/errors.hpp"
#include "heg/generators.hpp"
#include "heg/hgcrp.hpp"
#include "heg/io.hpp"
#include "heg/stability.hpp"
#include "heg/verify.hpp"
#include "json.hpp"

namespace heg::cli {
namespace {

using Game = std::variant<Instance, HgcrpInstance>;

struct RunConfig {
  std::uint64_t subset_budget = Limits{}.subset_budget;
  int partition_limit = Limits{}.partition_limit;
  double epsilon = Limits{}.epsilon;
  std::uint64_t seed = 0;
  bool json = false;

  std::string instance_path;
  std::string partition_path;
  std::string spec_path;
  std::string trace_path;
  std::string property;
  std::string method;
  std::string from;
  std::string problem;
  std::string pool;
  double alpha = 1.0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

Limits limits_of(const RunConfig& cfg) {
  Limits limits;
  limits.subset_budget = cfg.subset_budget;
  limits.partition_limit = cfg.partition_limit;
  limits.epsilon = cfg.epsilon;
  return limits;
}

Game load_game(const RunConfig& cfg) {
  Game game = parse_game(read_file(cfg.instance_path));
  std::visit([&](auto& g) { g.set_epsilon(cfg.epsilon); }, game);
  return game;
}

HgcrpInstance as_hgcrp(const Game& game, double epsilon) {
  if (const auto* inst = std::get_if<Instance>(&game)) {
    HgcrpInstance g = HgcrpInstance::from_heg(*inst);
    g.set_epsilon(epsilon);
    return g;
  }
  return std::get<HgcrpInstance>(game);
}

const Instance& require_heg(const Game& game, const std::string& what) {
  if (const auto* inst = std::get_if<Instance>(&game)) return *inst;
  throw InvalidArgument(what + " needs an HEG instance");
}

Property parse_property(const std::string& name) {
  if (name == "ns") return Property::NS;
  if (name == "cis") return Property::CIS;
  if (name == "core") return Property::CS;
  if (name == "approx-core") return Property::ApproxCS;
  if (name == "perfect") return Property::Perfect;
  if (name == "so") return Property::SO;
  return Property::PO;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const Game game = load_game(cfg);
  const HgcrpInstance g = as_hgcrp(game, cfg.epsilon);
  const Partition p =
      parse_partition(read_file(cfg.partition_path), g.agents(), g.kappa());
  const Limits limits = limits_of(cfg);
  StabilityReport report;
  switch (parse_property(cfg.property)) {
    case Property::NS:
      report = is_nash_stable(g, p);
      break;
    case Property::CIS:
      report = is_cis(g, p);
      break;
    case Property::CS:
      report = is_core_stable(g, p, limits);
      break;
    case Property::ApproxCS:
      report = is_alpha_core_stable(g, p, cfg.alpha, limits);
      break;
    case Property::Perfect:
      report = is_perfect(g, p, limits);
      break;
    case Property::SO:
      report = is_socially_optimal(g, p, limits);
      break;
    case Property::PO:
      report = is_pareto_optimal(g, p, limits);
      break;
  }
  out << serialize(report, g.agents());
  return report.holds ? kOk : kDoesNotHold;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Game game = load_game(cfg);
  const Limits limits = limits_of(cfg);
  std::optional<Partition> partition;
  std::optional<MoveTrace> trace;
  if (cfg.method == "greedy-core") {
    partition = greedy_core_partition(require_heg(game, cfg.method));
  } else if (cfg.method == "brd") {
    DynamicsResult r =
        imitative_brd(require_heg(game, cfg.method), cfg.seed, limits);
    partition = std::move(r.partition);
    trace = std::move(r.trace);
  } else if (cfg.method == "cis") {
    DynamicsResult r =
        cis_algorithm(require_heg(game, cfg.method), cfg.seed, limits);
    partition = std::move(r.partition);
    trace = std::move(r.trace);
  } else {
    partition = psi_maximal_partition(as_hgcrp(game, cfg.epsilon), limits);
  }
  const auto& ids = std::visit(
      [](const auto& g) -> const std::vector<std::string>& {
        return g.agents();
      },
      game);
  if (!cfg.trace_path.empty()) {
    write_file(cfg.trace_path,
               serialize(trace.value_or(MoveTrace{{}, cfg.seed, std::nullopt}),
                         ids));
  }
  out << serialize(*partition, ids);
  return kOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const std::string spec = read_file(cfg.spec_path);
  std::optional<Instance> inst;
  if (cfg.from == "max-coverage") {
    inst = from_max_coverage(parse_set_system(spec));
  } else if (cfg.from == "set-cover") {
    inst = from_set_cover(parse_set_system(spec));
  } else if (cfg.from == "hvcg") {
    inst = from_graph(parse_graph(spec));
  } else {
    RandomParams params = parse_random_params(spec);
    params.seed = cfg.seed;
    inst = random_instance(params);
  }
  out << serialize(*inst);
  return kOk;
}

nlohmann::ordered_json number(double v) {
  if (v == std::floor(v) && std::fabs(v) < 9e15) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

std::vector<AgentIndex> parse_pool(const Instance& inst,
                                   const std::string& text) {
  std::vector<AgentIndex> pool;
  if (text.empty()) return all_agents(inst.num_agents());
  std::stringstream ss(text);
  std::string id;
  while (std::getline(ss, id, ',')) pool.push_back(inst.agent_index(id));
  std::sort(pool.begin(), pool.end());
  if (std::adjacent_find(pool.begin(), pool.end()) != pool.end()) {
    throw InvalidArgument("duplicate agent in --pool");
  }
  return pool;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Game game = load_game(cfg);
  const Instance& inst = require_heg(game, cfg.problem);
  const std::vector<AgentIndex> pool = parse_pool(inst, cfg.pool);
  const Coalition greedy = greedy_max_joint_utility(inst, pool);
  const Coalition best =
      brute_force_max_joint_utility(inst, pool, limits_of(cfg));
  auto describe = [&](const Coalition& c) {
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (AgentIndex a : c) members.push_back(inst.agents()[a]);
    return nlohmann::ordered_json{{"coalition", members},
                                  {"utility", number(joint_utility(inst, c))}};
  };
  const double u_greedy = joint_utility(inst, greedy);
  const double u_best = joint_utility(inst, best);
  nlohmann::ordered_json doc{
      {"problem", "max-joint-utility"},
      {"greedy", describe(greedy)},
      {"optimum", describe(best)},
      {"ratio", number(u_best > 0 ? u_greedy / u_best : 1.0)},
  };
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& cfg, bool budget_set, bool limit_set,
               bool epsilon_set, std::ostream& out) {
  verify::SuiteConfig suite;
  suite.seed = cfg.seed;
  if (budget_set) suite.limits.subset_budget = cfg.subset_budget;
  if (limit_set) suite.limits.partition_limit = cfg.partition_limit;
  if (epsilon_set) suite.limits.epsilon = cfg.epsilon;
  const auto report = verify::verify_paper(
      suite, [&](const verify::CriterionResult& r) {
        if (!cfg.json) out << verify::format_line(r) << "\n" << std::flush;
      });
  bool failed = false;
  bool skipped = false;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    failed |= r.outcome == verify::Outcome::Fail;
    skipped |= r.outcome == verify::Outcome::Skipped;
    rows.push_back({{"id", r.id},
                    {"title", r.title},
                    {"outcome", std::string(verify::to_string(r.outcome))},
                    {"detail", r.detail},
                    {"seconds", r.seconds},
                    {"time_limit", r.time_limit}});
  }
  if (cfg.json) {
    out << nlohmann::ordered_json{{"criteria", rows},
                                  {"all_passed", report.all_passed()}}
                .dump(2)
        << "\n";
  }
  if (failed) return kDoesNotHold;
  return skipped ? kCapability : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Hedonic expertise games: solvers and stability checkers",
               "heg"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* budget_opt =
      app.add_option("--subset-budget", cfg.subset_budget,
                     "Maximum coalitions visited by exhaustive subset scans")
          ->check(CLI::PositiveNumber);
  auto* limit_opt =
      app.add_option("--partition-limit", cfg.partition_limit,
                     "Maximum agents for scans over all partitions")
          ->check(CLI::PositiveNumber);
  auto* eps_opt = app.add_option("--epsilon", cfg.epsilon,
                                 "Tolerance for real-valued comparisons")
                      ->check(CLI::Range(0.0, 1e-3));
  app.add_option("--seed", cfg.seed, "Seed for every random choice");
  app.add_flag("--json", cfg.json, "Machine-readable reports");

  auto* check = app.add_subcommand("check", "Check a stability property");
  check->add_option("--property", cfg.property)
      ->required()
      ->check(CLI::IsMember(
          {"ns", "cis", "core", "approx-core", "perfect", "so", "po"}));
  check->add_option("--alpha", cfg.alpha, "Approximation factor in (0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  check->add_option("--instance", cfg.instance_path)
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("--partition", cfg.partition_path)
      ->required()
      ->check(CLI::ExistingFile);

  auto* solve = app.add_subcommand("solve", "Compute a partition");
  solve->add_option("--method", cfg.method)
      ->required()
      ->check(CLI::IsMember({"greedy-core", "brd", "cis", "brute-optimal"}));
  solve->add_option("--instance", cfg.instance_path)
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--trace", cfg.trace_path, "Write the move trace here");

  auto* generate = app.add_subcommand("generate", "Build an instance");
  generate->add_option("--from", cfg.from)
      ->required()
      ->check(CLI::IsMember({"max-coverage", "set-cover", "hvcg", "random"}));
  generate->add_option("--spec", cfg.spec_path)
      ->required()
      ->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle", "Run a reference solver");
  oracle->add_option("--problem", cfg.problem)
      ->required()
      ->check(CLI::IsMember({"max-joint-utility"}));
  oracle->add_option("--instance", cfg.instance_path)
      ->required()
      ->check(CLI::ExistingFile);
  oracle->add_option("--pool", cfg.pool, "Comma-separated agent ids");

  auto* verify_cmd =
      app.add_subcommand("verify-paper", "Run the acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "heg: " << e.what() << "\n";
    return kUsage;
  }
  if (cfg.epsilon <= 0) {
    err << "heg: --epsilon must be in (0, 1e-3]\n";
    return kUsage;
  }
  if (cfg.alpha <= 0) {
    err << "heg: --alpha must be in (0, 1]\n";
    return kUsage;
  }

  try {
    if (*check) return cmd_check(cfg, out);
    if (*solve) return cmd_solve(cfg, out);
    if (*generate) return cmd_generate(cfg, out);
    if (*oracle) return cmd_oracle(cfg, out);
    if (*verify_cmd) {
      return cmd_verify(cfg, budget_opt->count() > 0, limit_opt->count() > 0,
                        eps_opt->count() > 0, out);
    }
  } catch (const JsonError& e) {
    err << "heg: " << e.what() << "\n";
    return kUsage;
  } catch (const CapabilityError& e) {
    err << "heg: capability limit: " << e.what() << "\n";
    return kCapability;
  } catch (const std::invalid_argument& e) {
    err << "heg: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace heg::cli
