#pragma once

// Naive reference implementations, written straight from the definitions and
// sharing no code with the library beyond the SetPartition value type.

#include "partlab/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

// All set partitions of [n] by inserting each element into an existing block
// or a new one.
inline std::vector<Blocks> all_block_lists(int n) {
  std::vector<Blocks> out;
  Blocks current;
  auto rec = [&](auto&& self, int e) -> void {
    if (e > n) {
      out.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(e);
      self(self, e + 1);
      current[b].pop_back();
    }
    current.push_back({e});
    self(self, e + 1);
    current.pop_back();
  };
  rec(rec, 1);
  return out;
}

inline std::vector<partlab::SetPartition> all_partitions(int n) {
  std::vector<partlab::SetPartition> out;
  for (const auto& b : all_block_lists(n)) out.push_back(partlab::SetPartition::from_blocks(b, n));
  return out;
}

struct Arc {
  int i, j;
};

inline std::vector<Arc> standard_arcs(const partlab::SetPartition& p) {
  std::vector<Arc> out;
  for (const auto& b : p.blocks())
    for (std::size_t t = 0; t + 1 < b.size(); ++t) out.push_back({b[t], b[t + 1]});
  return out;
}

inline std::vector<Arc> front_arcs(const partlab::SetPartition& p) {
  std::vector<Arc> out;
  for (const auto& b : p.blocks())
    for (std::size_t t = 1; t < b.size(); ++t) out.push_back({b[0], b[t]});
  return out;
}

inline int heads_strictly_between(const partlab::SetPartition& p, int lo, int hi) {
  int c = 0;
  for (const auto& b : p.blocks()) c += (b[0] > lo && b[0] < hi) ? 1 : 0;
  return c;
}

// Relabels a word by order of first appearance of its values' ranks.
inline std::vector<int> pattern(const std::vector<int>& w) {
  std::set<int> values(w.begin(), w.end());
  std::map<int, int> rank;
  int r = 0;
  for (int v : values) rank[v] = ++r;
  std::vector<int> out;
  for (int v : w) out.push_back(rank[v]);
  return out;
}

// Number of index subsets whose subword has pattern tau.
inline int occurrences(const partlab::SetPartition& p, const std::vector<int>& tau) {
  const auto word = p.word();
  const int n = static_cast<int>(word.size());
  const int m = static_cast<int>(tau.size());
  int count = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<int> sub;
    for (int t = 0; t < n; ++t)
      if (mask >> t & 1U) sub.push_back(word[t]);
    count += pattern(sub) == tau ? 1 : 0;
  }
  return count;
}

inline int crossings(const partlab::SetPartition& p) {
  int c = 0;
  for (auto a : standard_arcs(p))
    for (auto b : standard_arcs(p)) c += (a.i < b.i && b.i < a.j && a.j < b.j) ? 1 : 0;
  return c;
}

inline int nestings(const partlab::SetPartition& p) {
  int c = 0;
  for (auto a : standard_arcs(p))
    for (auto b : standard_arcs(p)) c += (a.i < b.i && b.j < a.j) ? 1 : 0;
  return c;
}

inline int distant_crossings(const partlab::SetPartition& p, int k) {
  int c = 0;
  for (auto a : standard_arcs(p))
    for (auto b : standard_arcs(p)) c += (a.i < b.i && b.i < a.j && a.j < b.j && a.j - b.i >= k) ? 1 : 0;
  return c;
}

inline int front_crossings(const partlab::SetPartition& p, int k) {
  int c = 0;
  for (auto a : front_arcs(p))
    for (auto b : front_arcs(p)) {
      if (a.i < b.i && b.i < a.j && a.j < b.j && heads_strictly_between(p, b.i, a.j) >= k - 2) ++c;
    }
  return c;
}

inline int front_nestings(const partlab::SetPartition& p, int k) {
  int c = 0;
  for (auto a : front_arcs(p))
    for (auto b : front_arcs(p)) {
      if (a.i < b.i && b.j < a.j && heads_strictly_between(p, b.i, b.j) >= k - 2) ++c;
    }
  return c;
}

// Largest subset of arcs that is pairwise crossing (or nesting), by trying
// every subset. weak allows equal left endpoints.
inline int largest_chain(const std::vector<Arc>& arcs, bool nesting, bool weak) {
  const int m = static_cast<int>(arcs.size());
  auto related = [&](Arc a, Arc b) {
    if (a.i > b.i || (a.i == b.i && (nesting ? a.j < b.j : a.j > b.j))) std::swap(a, b);
    const bool left = weak ? a.i <= b.i : a.i < b.i;
    if (nesting) return left && b.j < a.j && b.i < b.j;
    return left && b.i < a.j && a.j < b.j;
  };
  int best = 0;
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int b = a + 1; b < m && ok; ++b)
        if ((mask >> a & 1U) && (mask >> b & 1U)) ok = related(arcs[a], arcs[b]);
    if (ok) best = size;
  }
  return best;
}

}  // namespace oracle
