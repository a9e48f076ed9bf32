#pragma once

#include "partlab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace partlab {

/// Runs `visit(acc, p)` for every p in Π_n. With jobs > 1 the words are
/// sharded by prefix and the shards run on that many threads, each into its
/// own accumulator; `merge(total, shard)` then folds the shard results in
/// lexicographic prefix order, so the result does not depend on scheduling.
template <class Acc, class Visit, class Merge>
Acc sweep(int n, int jobs, Visit visit, Merge merge) {
  if (jobs <= 1 || n < 2) {
    Acc acc{};
    for (const auto& p : enumerate(n)) visit(acc, p);
    return acc;
  }
  const auto prefixes = word_prefixes(std::min(n, 6));
  std::vector<Acc> shards(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t s = next++; s < prefixes.size(); s = next++) {
      for (const auto& p : enumerate(n, prefixes[s])) visit(shards[s], p);
    }
  };
  std::vector<std::jthread> threads;
  const int count = std::min<int>(jobs, static_cast<int>(prefixes.size()));
  for (int t = 0; t < count; ++t) threads.emplace_back(worker);
  threads.clear();
  Acc total{};
  for (auto& shard : shards) merge(total, shard);
  return total;
}

}  // namespace partlab
