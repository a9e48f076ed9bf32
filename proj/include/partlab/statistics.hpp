#pragma once

#include "partlab/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partlab {

namespace detail {

inline void require_at_least(int k, int lower, const char* what) {
  if (k < lower) {
    throw DomainError(std::string(what) + " needs k >= " + std::to_string(lower) + ", got " +
                      std::to_string(k));
  }
}

// Pair (a, b) of edges with a.i < b.i: crossing iff b.i < a.j < b.j,
// nesting iff b.j < a.j.
inline bool crosses(const Edge& a, const Edge& b) { return a.i < b.i && b.i < a.j && a.j < b.j; }
inline bool nests(const Edge& a, const Edge& b) { return a.i < b.i && b.j < a.j; }

/// heads_below[x] = number of heads h with h < x, for x in 0..n+1.
inline std::vector<int> head_prefix_counts(const SetPartition& p) {
  std::vector<int> below(p.size() + 2, 0);
  int top = 0;
  for (int x = 1; x <= p.size() + 1; ++x) {
    const bool head = x - 1 >= 1 && p.block_of(x - 1) > top;
    if (head) top = p.block_of(x - 1);
    below[x] = below[x - 1] + (head ? 1 : 0);
  }
  return below;
}

}  // namespace detail

/// Crossing pairs among standard edges.
inline int cr(const SetPartition& p) {
  const auto e = standard_edges(p);
  int count = 0;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = 0; b < e.size(); ++b) count += detail::crosses(e[a], e[b]) ? 1 : 0;
  return count;
}

/// Nesting pairs among standard edges.
inline int ne(const SetPartition& p) {
  const auto e = standard_edges(p);
  int count = 0;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = 0; b < e.size(); ++b) count += detail::nests(e[a], e[b]) ? 1 : 0;
  return count;
}

/// k-distant crossings: crossing standard edges with j_1 - i_2 >= k.
inline int dcr(const SetPartition& p, int k) {
  detail::require_at_least(k, 1, "dcr");
  const auto e = standard_edges(p);
  int count = 0;
  for (const auto& a : e)
    for (const auto& b : e) count += (detail::crosses(a, b) && a.j - b.i >= k) ? 1 : 0;
  return count;
}

/// k-distant nestings: nesting standard edges with j_2 - i_2 >= k.
inline int dne(const SetPartition& p, int k) {
  detail::require_at_least(k, 1, "dne");
  const auto e = standard_edges(p);
  int count = 0;
  for (const auto& a : e)
    for (const auto& b : e) count += (detail::nests(a, b) && b.j - b.i >= k) ? 1 : 0;
  return count;
}

/// k-front crossings: crossing front edges with at least k-2 heads strictly
/// between i_2 and j_1.
inline int fcr(const SetPartition& p, int k) {
  detail::require_at_least(k, 2, "fcr");
  const auto e = front_edges(p);
  const auto below = detail::head_prefix_counts(p);
  int count = 0;
  for (const auto& a : e)
    for (const auto& b : e) {
      if (detail::crosses(a, b) && below[a.j] - below[b.i + 1] >= k - 2) ++count;
    }
  return count;
}

/// k-front nestings: nesting front edges with at least k-2 heads strictly
/// between i_2 and j_2.
inline int fne(const SetPartition& p, int k) {
  detail::require_at_least(k, 2, "fne");
  const auto e = front_edges(p);
  const auto below = detail::head_prefix_counts(p);
  int count = 0;
  for (const auto& a : e)
    for (const auto& b : e) {
      if (detail::nests(a, b) && below[b.j] - below[b.i + 1] >= k - 2) ++count;
    }
  return count;
}

enum class ChainKind { CR, NE, FCR, FNE, WFCR, WFNE };

inline std::string_view to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::CR: return "CR";
    case ChainKind::NE: return "NE";
    case ChainKind::FCR: return "FCR";
    case ChainKind::FNE: return "FNE";
    case ChainKind::WFCR: return "WFCR";
    case ChainKind::WFNE: return "WFNE";
  }
  return "?";
}

/// Largest r admitting an r-chain of the given kind: r mutually crossing
/// (i_1 < ... < i_r < j_1 < ... < j_r) or mutually nesting
/// (i_1 < ... < i_r < j_r < ... < j_1) edges. CR/NE use standard edges, the
/// rest front edges; the weak kinds relax the left endpoints to i_1 <= ... <= i_r.
/// A lone edge is a 1-chain; no edges gives 0.
///
/// Every chain of this shape has all left endpoints at or below some cut x and
/// all right endpoints above it, and inside one cut the chain condition reduces
/// to a transitive order on edges, so each cut is a longest-path DP.
inline int chain_max(const SetPartition& p, ChainKind kind) {
  const bool standard = kind == ChainKind::CR || kind == ChainKind::NE;
  const bool nesting = kind == ChainKind::NE || kind == ChainKind::FNE || kind == ChainKind::WFNE;
  const bool weak = kind == ChainKind::WFCR || kind == ChainKind::WFNE;
  auto edges = standard ? standard_edges(p) : front_edges(p);
  if (edges.empty()) return 0;
  // Equal left endpoints (weak nestings) must put the longer edge first.
  std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    if (a.i != b.i) return a.i < b.i;
    return nesting ? a.j > b.j : a.j < b.j;
  });
  auto precedes = [&](const Edge& a, const Edge& b) {
    const bool left = weak ? a.i <= b.i : a.i < b.i;
    const bool right = nesting ? a.j > b.j : a.j < b.j;
    return left && right;
  };
  int best = 0;
  std::vector<int> length(edges.size());
  for (int cut = 1; cut < p.size(); ++cut) {
    for (std::size_t b = 0; b < edges.size(); ++b) {
      length[b] = 0;
      if (edges[b].i > cut || edges[b].j <= cut) continue;
      length[b] = 1;
      for (std::size_t a = 0; a < b; ++a) {
        if (length[a] > 0 && precedes(edges[a], edges[b])) {
          length[b] = std::max(length[b], length[a] + 1);
        }
      }
      best = std::max(best, length[b]);
    }
  }
  return best;
}

/// A named statistic as used on the command line: cr, ne, dcr:k, dne:k,
/// fcr:k, fne:k, CR, NE, FCR, FNE, WFCR, WFNE.
struct Statistic {
  enum class Family { Cr, Ne, Dcr, Dne, Fcr, Fne, Chain };

  Family family = Family::Cr;
  int k = 0;
  ChainKind chain = ChainKind::CR;

  static Statistic parse(std::string_view token) {
    const auto colon = token.find(':');
    const std::string_view name = token.substr(0, colon);
    int k = 0;
    if (colon != std::string_view::npos) {
      const auto digits = token.substr(colon + 1);
      if (digits.empty()) throw ParseError("missing parameter", colon + 1);
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < '0' || digits[i] > '9') throw ParseError("bad parameter", colon + 1 + i);
        k = k * 10 + (digits[i] - '0');
        if (k > 1000) throw ParseError("parameter too large", colon + 1);
      }
    }
    const bool parameterized = name == "dcr" || name == "dne" || name == "fcr" || name == "fne";
    if (parameterized && colon == std::string_view::npos) {
      throw ParseError("statistic '" + std::string(name) + "' needs a parameter, e.g. " +
                           std::string(name) + ":2",
                       token.size());
    }
    if (!parameterized && colon != std::string_view::npos) {
      throw ParseError("statistic '" + std::string(name) + "' takes no parameter", colon);
    }
    Statistic s;
    s.k = k;
    if (name == "cr") s.family = Family::Cr;
    else if (name == "ne") s.family = Family::Ne;
    else if (name == "dcr") s.family = Family::Dcr;
    else if (name == "dne") s.family = Family::Dne;
    else if (name == "fcr") s.family = Family::Fcr;
    else if (name == "fne") s.family = Family::Fne;
    else {
      s.family = Family::Chain;
      if (name == "CR") s.chain = ChainKind::CR;
      else if (name == "NE") s.chain = ChainKind::NE;
      else if (name == "FCR") s.chain = ChainKind::FCR;
      else if (name == "FNE") s.chain = ChainKind::FNE;
      else if (name == "WFCR") s.chain = ChainKind::WFCR;
      else if (name == "WFNE") s.chain = ChainKind::WFNE;
      else throw ParseError("unknown statistic '" + std::string(token) + "'", 0);
    }
    if (s.family == Family::Dcr || s.family == Family::Dne) detail::require_at_least(k, 1, "dcr/dne");
    if (s.family == Family::Fcr || s.family == Family::Fne) detail::require_at_least(k, 2, "fcr/fne");
    return s;
  }

  [[nodiscard]] std::string name() const {
    switch (family) {
      case Family::Cr: return "cr";
      case Family::Ne: return "ne";
      case Family::Dcr: return "dcr:" + std::to_string(k);
      case Family::Dne: return "dne:" + std::to_string(k);
      case Family::Fcr: return "fcr:" + std::to_string(k);
      case Family::Fne: return "fne:" + std::to_string(k);
      case Family::Chain: return std::string(to_string(chain));
    }
    return "?";
  }

  [[nodiscard]] int operator()(const SetPartition& p) const {
    switch (family) {
      case Family::Cr: return cr(p);
      case Family::Ne: return ne(p);
      case Family::Dcr: return dcr(p, k);
      case Family::Dne: return dne(p, k);
      case Family::Fcr: return fcr(p, k);
      case Family::Fne: return fne(p, k);
      case Family::Chain: return chain_max(p, chain);
    }
    return 0;
  }
};

/// Joint distribution of two integer statistics: (x, y) -> count.
class JointHistogram {
 public:
  void add(int x, int y, std::uint64_t count = 1) { cells_[{x, y}] += count; }

  void merge(const JointHistogram& other) {
    for (const auto& [key, count] : other.cells_) cells_[key] += count;
  }

  [[nodiscard]] std::uint64_t at(int x, int y) const {
    const auto it = cells_.find({x, y});
    return it == cells_.end() ? 0 : it->second;
  }

  [[nodiscard]] JointHistogram transposed() const {
    JointHistogram t;
    for (const auto& [key, count] : cells_) t.cells_[{key.second, key.first}] = count;
    return t;
  }

  [[nodiscard]] bool is_symmetric() const { return *this == transposed(); }

  [[nodiscard]] std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto& [key, count] : cells_) sum += count;
    return sum;
  }

  [[nodiscard]] const std::map<std::pair<int, int>, std::uint64_t>& cells() const { return cells_; }

  /// First cell (in key order) where the two histograms disagree.
  [[nodiscard]] std::optional<std::pair<int, int>> first_difference(const JointHistogram& other) const {
    auto a = cells_.begin();
    auto b = other.cells_.begin();
    while (a != cells_.end() || b != other.cells_.end()) {
      if (b == other.cells_.end() || (a != cells_.end() && a->first < b->first)) return a->first;
      if (a == cells_.end() || b->first < a->first) return b->first;
      if (a->second != b->second) return a->first;
      ++a;
      ++b;
    }
    return std::nullopt;
  }

  friend bool operator==(const JointHistogram& a, const JointHistogram& b) {
    return a.cells_ == b.cells_;
  }

 private:
  std::map<std::pair<int, int>, std::uint64_t> cells_;
};

}  // namespace partlab
