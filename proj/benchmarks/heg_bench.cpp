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

#include <benchmark/benchmark.h>

#include "heg/algorithms.hpp"
#include "heg/generators.hpp"
#include "heg/hgcrp.hpp"
#include "heg/stability.hpp"

namespace {

heg::Instance make(int agents, int kappa, int seed) {
  heg::RandomParams params;
  params.agents = agents;
  params.skills = 6;
  params.kappa = kappa;
  params.beta = 3;
  params.density = 0.6;
  params.seed = static_cast<std::uint64_t>(seed);
  return heg::random_instance(params);
}

void BM_JointUtility(benchmark::State& state) {
  const auto inst = make(static_cast<int>(state.range(0)), 4, 1);
  const auto pool = heg::all_agents(inst.num_agents());
  for (auto _ : state) {
    benchmark::DoNotOptimize(heg::joint_utility(inst, pool));
  }
}
BENCHMARK(BM_JointUtility)->Arg(8)->Arg(64)->Arg(512);

void BM_GreedyMaxJointUtility(benchmark::State& state) {
  const auto inst = make(static_cast<int>(state.range(0)), 4, 2);
  const auto pool = heg::all_agents(inst.num_agents());
  for (auto _ : state) {
    benchmark::DoNotOptimize(heg::greedy_max_joint_utility(inst, pool));
  }
}
BENCHMARK(BM_GreedyMaxJointUtility)->Arg(12)->Arg(100)->Arg(1000);

void BM_BruteForceMaxJointUtility(benchmark::State& state) {
  const auto inst = make(static_cast<int>(state.range(0)), 4, 3);
  const auto pool = heg::all_agents(inst.num_agents());
  for (auto _ : state) {
    benchmark::DoNotOptimize(heg::brute_force_max_joint_utility(inst, pool));
  }
}
BENCHMARK(BM_BruteForceMaxJointUtility)->Arg(12)->Arg(20)->Arg(30);

void BM_GreedyCorePartition(benchmark::State& state) {
  const auto inst = make(static_cast<int>(state.range(0)), 4, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(heg::greedy_core_partition(inst));
  }
}
BENCHMARK(BM_GreedyCorePartition)->Arg(12)->Arg(100)->Arg(400);

void BM_ImitativeBrd(benchmark::State& state) {
  const auto inst = make(static_cast<int>(state.range(0)), 3, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(heg::imitative_brd(inst, 7));
  }
}
BENCHMARK(BM_ImitativeBrd)->Arg(15)->Arg(100)->Arg(400);

void BM_CisAlgorithm(benchmark::State& state) {
  const auto inst = make(static_cast<int>(state.range(0)), 3, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(heg::cis_algorithm(inst, 7));
  }
}
BENCHMARK(BM_CisAlgorithm)->Arg(15)->Arg(100)->Arg(400);

void BM_CoreStabilityCheck(benchmark::State& state) {
  const auto inst = make(static_cast<int>(state.range(0)), 4, 8);
  const auto g = heg::HgcrpInstance::from_heg(inst);
  const auto p = heg::greedy_core_partition(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(heg::is_core_stable(g, p));
  }
}
BENCHMARK(BM_CoreStabilityCheck)->Arg(12)->Arg(24);

void BM_PsiMaximalPartition(benchmark::State& state) {
  const auto g = heg::HgcrpInstance::from_heg(
      make(static_cast<int>(state.range(0)), 3, 9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(heg::psi_maximal_partition(g));
  }
}
BENCHMARK(BM_PsiMaximalPartition)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
