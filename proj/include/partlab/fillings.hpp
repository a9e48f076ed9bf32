#pragma once

#include "partlab/enumerate.hpp"
#include "partlab/numeric.hpp"
#include "partlab/partition.hpp"
#include "partlab/statistics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partlab {

/// Row lengths lambda_1 >= ... >= lambda_q >= 1, row 1 at the bottom.
class FerrersDiagram {
 public:
  FerrersDiagram() = default;

  explicit FerrersDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r] < 1) throw DomainError("row " + std::to_string(r + 1) + " has no cells");
      if (r > 0 && rows_[r] > rows_[r - 1]) {
        throw DomainError("row " + std::to_string(r + 1) + " is longer than the row below it");
      }
    }
  }

  /// (n-1, n-2, ..., 1).
  static FerrersDiagram staircase(int n) {
    std::vector<int> rows;
    for (int len = n - 1; len >= 1; --len) rows.push_back(len);
    return FerrersDiagram(std::move(rows));
  }

  [[nodiscard]] const std::vector<int>& rows() const noexcept { return rows_; }
  [[nodiscard]] int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int column_count() const noexcept { return rows_.empty() ? 0 : rows_[0]; }

  /// Length of row r (1-based); 0 above the top row.
  [[nodiscard]] int row_length(int r) const {
    return r >= 1 && r <= row_count() ? rows_[r - 1] : 0;
  }

  [[nodiscard]] bool contains(int col, int row) const { return col >= 1 && col <= row_length(row); }

  [[nodiscard]] int cell_count() const {
    int total = 0;
    for (int len : rows_) total += len;
    return total;
  }

  /// Cells in row-major order from the bottom row.
  [[nodiscard]] std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= row_count(); ++r)
      for (int c = 1; c <= row_length(r); ++c) out.emplace_back(c, r);
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r > 0) out += ',';
      out += std::to_string(rows_[r]);
    }
    return out;
  }

  friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;

 private:
  std::vector<int> rows_;
};

/// A cell (column, row) holding a 1.
struct Cell {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A 0-1 filling given by its set of 1-cells.
class Filling {
 public:
  Filling() = default;

  Filling(FerrersDiagram shape, std::vector<Cell> ones) : shape_(std::move(shape)), ones_(std::move(ones)) {
    std::sort(ones_.begin(), ones_.end());
    if (std::adjacent_find(ones_.begin(), ones_.end()) != ones_.end()) {
      throw DomainError("a cell is filled twice");
    }
    for (const Cell& c : ones_) {
      if (!shape_.contains(c.col, c.row)) {
        throw DomainError("cell (" + std::to_string(c.col) + "," + std::to_string(c.row) +
                          ") lies outside the diagram");
      }
    }
  }

  [[nodiscard]] const FerrersDiagram& shape() const noexcept { return shape_; }
  [[nodiscard]] const std::vector<Cell>& ones() const noexcept { return ones_; }

  /// c_1..c_p: number of 1s per column.
  [[nodiscard]] std::vector<int> column_counts() const {
    std::vector<int> c(shape_.column_count(), 0);
    for (const Cell& x : ones_) ++c[x.col - 1];
    return c;
  }

  /// r_1..r_q: number of 1s per row.
  [[nodiscard]] std::vector<int> row_counts() const {
    std::vector<int> r(shape_.row_count(), 0);
    for (const Cell& x : ones_) ++r[x.row - 1];
    return r;
  }

  /// "shape: 8,7,6 ones: (1,2) (4,6)".
  [[nodiscard]] std::string to_string() const {
    std::string out = "shape: " + shape_.to_string() + " ones:";
    for (const Cell& c : ones_) out += " (" + std::to_string(c.col) + "," + std::to_string(c.row) + ")";
    return out;
  }

  static Filling parse(std::string_view text);

  friend bool operator==(const Filling&, const Filling&) = default;

 private:
  FerrersDiagram shape_;
  std::vector<Cell> ones_;
};

inline Filling Filling::parse(std::string_view text) {
  const auto shape_at = text.find("shape:");
  const auto ones_at = text.find("ones:");
  if (shape_at == std::string_view::npos) throw ParseError("missing 'shape:'", 0);
  if (ones_at == std::string_view::npos || ones_at < shape_at) throw ParseError("missing 'ones:'", text.size());
  std::vector<int> rows;
  const auto shape_text = text.substr(shape_at + 6, ones_at - shape_at - 6);
  if (shape_text.find_first_not_of(" \t") != std::string_view::npos) {
    for (auto [v, offset] : detail::parse_int_list(shape_text, ",")) {
      static_cast<void>(offset);
      rows.push_back(v);
    }
  }
  std::vector<Cell> ones;
  std::size_t pos = ones_at + 5;
  while (true) {
    pos = text.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unclosed cell", pos);
    const auto pair = detail::parse_int_list(text.substr(pos + 1, close - pos - 1), ",");
    if (pair.size() != 2) throw ParseError("a cell needs two coordinates", pos);
    ones.push_back({pair[0].first, pair[1].first});
    pos = close + 1;
  }
  return Filling(FerrersDiagram(std::move(rows)), std::move(ones));
}

/// Chain directions. The first letter governs rows (n/s strictly north or
/// south, N/S weakly), the second columns (e strictly east, E weakly).
enum class FillingChain { ne, se, nE, Ne, sE, Se, NE, SE };

inline std::string_view to_string(FillingChain kind) {
  switch (kind) {
    case FillingChain::ne: return "ne";
    case FillingChain::se: return "se";
    case FillingChain::nE: return "nE";
    case FillingChain::Ne: return "Ne";
    case FillingChain::sE: return "sE";
    case FillingChain::Se: return "Se";
    case FillingChain::NE: return "NE";
    case FillingChain::SE: return "SE";
  }
  return "?";
}

inline FillingChain parse_filling_chain(std::string_view token) {
  for (auto kind : {FillingChain::ne, FillingChain::se, FillingChain::nE, FillingChain::Ne,
                    FillingChain::sE, FillingChain::Se, FillingChain::NE, FillingChain::SE}) {
    if (to_string(kind) == token) return kind;
  }
  throw ParseError("unknown chain kind '" + std::string(token) + "'", 0);
}

namespace detail {

struct ChainDirection {
  bool north;        // rows increase along the chain (else decrease)
  bool strict_row;
  bool strict_col;
};

inline ChainDirection direction(FillingChain kind) {
  const auto name = to_string(kind);
  return {name[0] == 'n' || name[0] == 'N', name[0] == 'n' || name[0] == 's', name[1] == 'e'};
}

// Whether b may follow a in a chain of the given direction.
inline bool chain_step(const Cell& a, const Cell& b, const ChainDirection& d) {
  if (a == b) return false;
  const bool col = d.strict_col ? b.col > a.col : b.col >= a.col;
  const int rise = d.north ? b.row - a.row : a.row - b.row;
  const bool row = d.strict_row ? rise > 0 : rise >= 0;
  return col && row;
}

// The smallest rectangle holding a chain's first and last cells lies in a
// Ferrers shape iff its top-right corner does.
inline bool extremes_fit(const FerrersDiagram& f, const Cell& first, const Cell& last) {
  return f.contains(std::max(first.col, last.col), std::max(first.row, last.row));
}

}  // namespace detail

/// Longest chain of 1-cells of the given kind whose first and last cells span
/// a rectangle inside the diagram. Chains run west to east; for each first
/// cell, a longest-path DP, keeping the end cells whose rectangle fits.
inline int chain_max(const Filling& f, FillingChain kind) {
  const auto d = detail::direction(kind);
  auto cells = f.ones();
  // Topological order for every direction: by column, then along the rows.
  std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
    if (a.col != b.col) return a.col < b.col;
    return d.north ? a.row < b.row : a.row > b.row;
  });
  const std::size_t m = cells.size();
  int best = 0;
  std::vector<int> length(m);
  for (std::size_t s = 0; s < m; ++s) {
    std::fill(length.begin(), length.end(), 0);
    length[s] = 1;
    best = std::max(best, 1);
    for (std::size_t b = s + 1; b < m; ++b) {
      for (std::size_t a = s; a < b; ++a) {
        if (length[a] > 0 && detail::chain_step(cells[a], cells[b], d)) {
          length[b] = std::max(length[b], length[a] + 1);
        }
      }
      if (detail::extremes_fit(f.shape(), cells[s], cells[b])) best = std::max(best, length[b]);
    }
  }
  return best;
}

// --- partitions as staircase fillings -----------------------------------------

/// Front edge (i, j) fills column i, row n+1-j of the staircase (n-1, ..., 1).
inline Filling partition_to_filling(const SetPartition& p) {
  const int n = p.size();
  std::vector<Cell> ones;
  for (const Edge& e : front_edges(p)) ones.push_back({e.i, n + 1 - e.j});
  return Filling(FerrersDiagram::staircase(n), std::move(ones));
}

/// Staircase fillings with every r_i <= 1 and c_i * r_{n+1-i} = 0.
inline bool is_admissible(const Filling& f) {
  const int n = f.shape().row_count() + 1;
  if (!(f.shape() == FerrersDiagram::staircase(n))) return false;
  const auto c = f.column_counts();
  const auto r = f.row_counts();
  for (int i = 1; i <= n - 1; ++i) {
    if (r[i - 1] > 1) return false;
    const int mirror = n + 1 - i;
    if (mirror <= n - 1 && c[i - 1] > 0 && r[mirror - 1] > 0) return false;
  }
  return true;
}

inline SetPartition filling_to_partition(const Filling& f) {
  const int n = f.shape().row_count() + 1;
  if (!(f.shape() == FerrersDiagram::staircase(n))) {
    throw DomainError("filling shape " + f.shape().to_string() + " is not a staircase");
  }
  const auto c = f.column_counts();
  const auto r = f.row_counts();
  for (int i = 1; i <= n - 1; ++i) {
    if (r[i - 1] > 1) throw DomainError("constraint r_" + std::to_string(i) + " <= 1 violated");
    const int mirror = n + 1 - i;
    if (mirror <= n - 1 && c[i - 1] > 0 && r[mirror - 1] > 0) {
      throw DomainError("constraint c_" + std::to_string(i) + " * r_" + std::to_string(mirror) +
                        " = 0 violated");
    }
  }
  std::vector<int> head(n + 1, 0);
  for (const Cell& x : f.ones()) head[n + 1 - x.row] = x.col;
  std::vector<std::vector<int>> blocks;
  std::vector<int> index(n + 1, -1);
  for (int e = 1; e <= n; ++e) {
    const int h = head[e] == 0 ? e : head[e];
    if (index[h] < 0) {
      index[h] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[index[h]].push_back(e);
  }
  return SetPartition::from_blocks(blocks, n);
}

// --- brute-force counting -----------------------------------------------------

constexpr int kMaxFillingCells = 16;

/// Calls visit(const Filling&) for every 0-1 filling of the diagram.
template <class Visit>
void for_each_filling(const FerrersDiagram& shape, Visit&& visit) {
  const auto cells = shape.cells();
  if (static_cast<int>(cells.size()) > kMaxFillingCells) {
    throw DomainError("diagram has " + std::to_string(cells.size()) + " cells; the cap is " +
                      std::to_string(kMaxFillingCells));
  }
  const std::uint32_t total = std::uint32_t{1} << cells.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<Cell> ones;
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (mask >> b & 1U) ones.push_back({cells[b].first, cells[b].second});
    }
    visit(Filling(shape, std::move(ones)));
  }
}

/// N(F, c, r; first = s, second = t): fillings with the given column and row
/// counts whose longest chains of the two kinds are s and t.
inline BigInt count_fillings(const FerrersDiagram& shape, const std::vector<int>& columns,
                             const std::vector<int>& rows, FillingChain first, int s,
                             FillingChain second, int t) {
  if (static_cast<int>(columns.size()) != shape.column_count() ||
      static_cast<int>(rows.size()) != shape.row_count()) {
    throw DomainError("margin vectors do not match the diagram");
  }
  BigInt count = 0;
  for_each_filling(shape, [&](const Filling& f) {
    if (f.column_counts() == columns && f.row_counts() == rows && chain_max(f, first) == s &&
        chain_max(f, second) == t) {
      ++count;
    }
  });
  return count;
}

/// Every Ferrers diagram with exactly `cells` cells, rows weakly decreasing.
inline std::vector<FerrersDiagram> ferrers_diagrams(int cells) {
  std::vector<FerrersDiagram> out;
  std::vector<int> rows;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.emplace_back(rows);
      return;
    }
    for (int len = std::min(left, cap); len >= 1; --len) {
      rows.push_back(len);
      self(self, left - len, len);
      rows.pop_back();
    }
  };
  if (cells > 0) rec(rec, cells, cells);
  return out;
}

/// Outcome of the symmetry N(F,c,r; nE=s, Se=t) = N(F,c,r; Ne=t, sE=s) on one diagram.
struct SymmetryCheck {
  bool holds = true;
  std::string witness;
};

inline SymmetryCheck check_chain_symmetry(const FerrersDiagram& shape) {
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::map<Key, JointHistogram> lhs, rhs;
  for_each_filling(shape, [&](const Filling& f) {
    const Key key{f.column_counts(), f.row_counts()};
    lhs[key].add(chain_max(f, FillingChain::nE), chain_max(f, FillingChain::Se));
    rhs[key].add(chain_max(f, FillingChain::sE), chain_max(f, FillingChain::Ne));
  });
  for (const auto& [key, hist] : lhs) {
    const auto& other = rhs[key];
    if (hist == other) continue;
    const auto cell = hist.first_difference(other);
    std::string margins = "c=";
    for (int c : key.first) margins += std::to_string(c);
    margins += " r=";
    for (int r : key.second) margins += std::to_string(r);
    return {false, "shape " + shape.to_string() + " " + margins + " (s,t)=(" +
                       std::to_string(cell->first) + "," + std::to_string(cell->second) + ")"};
  }
  return {};
}

/// Joint distributions (FCR, WFNE) and (FNE, WFCR) over Π_n, recomputed from
/// the staircase fillings; they must coincide. Also checks that the filling
/// chains reproduce the edge-based statistics.
struct FrontChainPairs {
  JointHistogram fcr_wfne;
  JointHistogram fne_wfcr;
  bool statistics_agree = true;
  std::string witness;

  [[nodiscard]] bool holds() const { return statistics_agree && fcr_wfne == fne_wfcr; }
};

inline FrontChainPairs front_chain_symmetry(int n) {
  FrontChainPairs out;
  for (const auto& p : enumerate(n)) {
    const Filling f = partition_to_filling(p);
    const int fcr_f = chain_max(f, FillingChain::se);
    const int fne_f = chain_max(f, FillingChain::ne);
    const int wfcr_f = chain_max(f, FillingChain::sE);
    const int wfne_f = chain_max(f, FillingChain::nE);
    if (out.statistics_agree &&
        (fcr_f != chain_max(p, ChainKind::FCR) || fne_f != chain_max(p, ChainKind::FNE) ||
         wfcr_f != chain_max(p, ChainKind::WFCR) || wfne_f != chain_max(p, ChainKind::WFNE))) {
      out.statistics_agree = false;
      out.witness = to_word_string(p);
    }
    out.fcr_wfne.add(fcr_f, wfne_f);
    out.fne_wfcr.add(fne_f, wfcr_f);
  }
  if (out.statistics_agree && !(out.fcr_wfne == out.fne_wfcr)) {
    const auto cell = out.fcr_wfne.first_difference(out.fne_wfcr);
    out.witness = "(" + std::to_string(cell->first) + "," + std::to_string(cell->second) + ")";
  }
  return out;
}

inline bool front_chain_pairs_agree(int n) { return front_chain_symmetry(n).holds(); }

}  // namespace partlab
