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

#include "heg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

namespace heg {
namespace {

__extension__ using Wide = unsigned __int128;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
// Below this many candidates a size class is scanned on the calling thread.
constexpr std::uint64_t kParallelThreshold = 1 << 15;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (c > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Lexicographic rank -> k-combination of {0..n-1}.
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<int> comb;
  comb.reserve(static_cast<std::size_t>(k));
  int x = 0;
  for (int i = 0; i < k; ++i) {
    for (;; ++x) {
      const std::uint64_t with_x = binomial(n - x - 1, k - i - 1);
      if (rank < with_x) {
        comb.push_back(x++);
        break;
      }
      rank -= with_x;
    }
  }
  return comb;
}

bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

void map_to_pool(const std::vector<int>& comb,
                 std::span<const AgentIndex> pool,
                 std::vector<AgentIndex>& out) {
  out.resize(comb.size());
  for (std::size_t i = 0; i < comb.size(); ++i) out[i] = pool[comb[i]];
}

// Splits [0, total) into `parts` contiguous chunks and runs body(begin, end,
// part) on one thread each.
template <typename Body>
void run_chunks(std::uint64_t total, int parts, Body&& body) {
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(parts));
  const std::uint64_t step = (total + parts - 1) / parts;
  for (int t = 0; t < parts; ++t) {
    const std::uint64_t begin = std::min(total, step * t);
    const std::uint64_t end = std::min(total, begin + step);
    workers.emplace_back([&, begin, end, t] { body(begin, end, t); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

std::uint64_t count_subsets(int n, int max_size) {
  std::uint64_t total = 0;
  for (int k = 1; k <= std::min(n, max_size); ++k) {
    total = saturating_add(total, binomial(n, k));
  }
  return total;
}

std::uint64_t count_partitions(int n, int kappa) {
  // P(m) = sum_j C(m-1, j-1) P(m-j): choose the block of the first element.
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t total = 0;
    for (int j = 1; j <= std::min(kappa, m); ++j) {
      const std::uint64_t ways = binomial(m - 1, j - 1);
      const Wide term =
          static_cast<Wide>(ways) * p[m - j];
      total = saturating_add(
          total, term > kSaturated ? kSaturated
                                   : static_cast<std::uint64_t>(term));
    }
    p[m] = total;
  }
  return p[n];
}

bool for_each_subset(std::span<const AgentIndex> pool, int max_size,
                     const SubsetPredicate& visit) {
  const int n = static_cast<int>(pool.size());
  std::vector<AgentIndex> subset;
  for (int k = 1; k <= std::min(n, max_size); ++k) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      map_to_pool(comb, pool, subset);
      if (visit(subset)) return true;
    } while (next_combination(comb, n));
  }
  return false;
}

std::optional<std::vector<AgentIndex>> find_first_subset(
    std::span<const AgentIndex> pool, int max_size, const SubsetPredicate& pred,
    int threads) {
  const int n = static_cast<int>(pool.size());
  for (int k = 1; k <= std::min(n, max_size); ++k) {
    const std::uint64_t total = binomial(n, k);
    const int parts = total < kParallelThreshold
                          ? 1
                          : static_cast<int>(std::min<std::uint64_t>(
                                std::max(threads, 1), total));
    std::atomic<std::uint64_t> found{kSaturated};
    auto scan = [&](std::uint64_t begin, std::uint64_t end, int) {
      if (begin >= end) return;
      std::vector<int> comb = unrank_combination(n, k, begin);
      std::vector<AgentIndex> subset;
      for (std::uint64_t r = begin; r < end; ++r) {
        // A lower-ranked hit elsewhere makes the rest of this chunk moot.
        if (r > found.load(std::memory_order_relaxed)) return;
        map_to_pool(comb, pool, subset);
        if (pred(subset)) {
          std::uint64_t cur = found.load();
          while (r < cur && !found.compare_exchange_weak(cur, r)) {
          }
          return;
        }
        next_combination(comb, n);
      }
    };
    if (parts == 1) {
      scan(0, total, 0);
    } else {
      run_chunks(total, parts, scan);
    }
    if (found.load() != kSaturated) {
      std::vector<AgentIndex> subset;
      map_to_pool(unrank_combination(n, k, found.load()), pool, subset);
      return subset;
    }
  }
  return std::nullopt;
}

std::vector<AgentIndex> best_subset(std::span<const AgentIndex> pool,
                                    int max_size, const SubsetValue& value,
                                    int threads) {
  const int n = static_cast<int>(pool.size());
  std::vector<AgentIndex> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= std::min(n, max_size); ++k) {
    const std::uint64_t total = binomial(n, k);
    const int parts = total < kParallelThreshold
                          ? 1
                          : static_cast<int>(std::min<std::uint64_t>(
                                std::max(threads, 1), total));
    struct ChunkBest {
      double value = -std::numeric_limits<double>::infinity();
      std::uint64_t rank = kSaturated;
    };
    std::vector<ChunkBest> chunk(static_cast<std::size_t>(parts));
    auto scan = [&](std::uint64_t begin, std::uint64_t end, int part) {
      if (begin >= end) return;
      std::vector<int> comb = unrank_combination(n, k, begin);
      std::vector<AgentIndex> subset;
      ChunkBest local;
      for (std::uint64_t r = begin; r < end; ++r) {
        map_to_pool(comb, pool, subset);
        const double v = value(subset);
        if (v > local.value) local = {v, r};
        next_combination(comb, n);
      }
      chunk[part] = local;
    };
    if (parts == 1) {
      scan(0, total, 0);
    } else {
      run_chunks(total, parts, scan);
    }
    // Chunks are in rank order, so strict > keeps the first maximum.
    for (const ChunkBest& c : chunk) {
      if (c.rank != kSaturated && c.value > best_value) {
        best_value = c.value;
        map_to_pool(unrank_combination(n, k, c.rank), pool, best);
      }
    }
  }
  return best;
}

namespace {

struct PartitionWalker {
  int n;
  int kappa;
  const std::function<bool(const Partition&)>& visit;
  std::vector<std::vector<AgentIndex>> blocks;
  bool stopped = false;

  void place(AgentIndex agent) {
    if (stopped) return;
    if (agent == n) {
      std::vector<Coalition> cs;
      cs.reserve(blocks.size());
      for (const auto& b : blocks) cs.emplace_back(b);
      stopped = visit(Partition(std::move(cs), n, kappa));
      return;
    }
    for (std::size_t b = 0; b < blocks.size() && !stopped; ++b) {
      if (static_cast<int>(blocks[b].size()) >= kappa) continue;
      blocks[b].push_back(agent);
      place(agent + 1);
      blocks[b].pop_back();
    }
    if (stopped) return;
    blocks.push_back({agent});
    place(agent + 1);
    blocks.pop_back();
  }
};

}  // namespace

bool for_each_partition(int n, int kappa,
                        const std::function<bool(const Partition&)>& visit) {
  if (n <= 0) return false;
  PartitionWalker walker{n, kappa, visit, {}, false};
  walker.place(0);
  return walker.stopped;
}

int oracle_threads() {
  if (const char* env = std::getenv("HEG_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace heg
