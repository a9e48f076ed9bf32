#pragma once

#include "partlab/numeric.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partlab {

/// Raised when a block list does not describe a partition of [n].
class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An (i, j) pair of 1-based vertices with i < j.
struct Edge {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A partition of [n] = {1..n}, stored as its canonical word (restricted
/// growth string): a_1 = 1 and a_{i+1} <= 1 + max(a_1..a_i). Element i lies in
/// block a_i, blocks being numbered by increasing minimum. The empty word is
/// the unique partition of [0].
class SetPartition {
 public:
  SetPartition() = default;

  /// Validates the restricted growth property.
  static SetPartition from_word(std::vector<int> word) {
    int top = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] < 1 || word[i] > top + 1) {
        throw ValidationError("canonical word violates restricted growth at element " +
                              std::to_string(i + 1));
      }
      top = std::max(top, word[i]);
    }
    SetPartition p;
    p.word_ = std::move(word);
    p.blocks_ = top;
    return p;
  }

  /// Builds a partition from arbitrary-order blocks; blocks are re-sorted by minima.
  static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks, int n) {
    if (n < 0) throw ValidationError("negative ground-set size");
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw ValidationError("block " + std::to_string(b + 1) + " is empty");
      }
      for (int e : blocks[b]) {
        if (e < 1 || e > n) {
          throw ValidationError("element " + std::to_string(e) + " is outside [" +
                                std::to_string(n) + "]");
        }
        if (owner[e] != 0) {
          throw ValidationError("element " + std::to_string(e) + " occurs in two blocks");
        }
        owner[e] = static_cast<int>(b) + 1;
      }
    }
    std::vector<int> relabel(blocks.size() + 1, 0);
    std::vector<int> word;
    word.reserve(n);
    int next = 0;
    for (int e = 1; e <= n; ++e) {
      if (owner[e] == 0) {
        throw ValidationError("element " + std::to_string(e) + " is not covered by any block");
      }
      int& label = relabel[owner[e]];
      if (label == 0) label = ++next;
      word.push_back(label);
    }
    SetPartition p;
    p.word_ = std::move(word);
    p.blocks_ = next;
    return p;
  }

  [[nodiscard]] int size() const noexcept { return static_cast<int>(word_.size()); }
  [[nodiscard]] int block_count() const noexcept { return blocks_; }
  [[nodiscard]] std::span<const int> word() const noexcept { return word_; }

  /// 1-based block index of a 1-based element.
  [[nodiscard]] int block_of(int element) const { return word_.at(element - 1); }

  [[nodiscard]] std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (int e = 1; e <= size(); ++e) out[word_[e - 1] - 1].push_back(e);
    return out;
  }

  /// Head of the block containing `element`.
  [[nodiscard]] int head_of(int element) const {
    const int b = block_of(element);
    for (int e = 1; e <= size(); ++e) {
      if (word_[e - 1] == b) return e;
    }
    return element;  // unreachable for valid input
  }

  [[nodiscard]] bool is_head(int element) const {
    const int b = block_of(element);
    for (int e = 1; e < element; ++e) {
      if (word_[e - 1] == b) return false;
    }
    return true;
  }

  [[nodiscard]] bool is_singleton(int element) const {
    const int b = block_of(element);
    for (int e = 1; e <= size(); ++e) {
      if (e != element && word_[e - 1] == b) return false;
    }
    return true;
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.word_ == b.word_; }
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.word_ <=> b.word_;
  }

 private:
  friend class PartitionEnumerator;

  std::vector<int> word_;
  int blocks_ = 0;
};

/// Consecutive-element pairs within each block, sorted by (i, j).
inline std::vector<Edge> standard_edges(const SetPartition& p) {
  std::vector<int> last(p.block_count() + 1, 0);
  std::vector<Edge> edges;
  for (int e = 1; e <= p.size(); ++e) {
    int& prev = last[p.block_of(e)];
    if (prev != 0) edges.push_back({prev, e});
    prev = e;
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// Head-to-member pairs of each block, sorted by (i, j).
inline std::vector<Edge> front_edges(const SetPartition& p) {
  std::vector<int> head(p.block_count() + 1, 0);
  std::vector<Edge> edges;
  for (int e = 1; e <= p.size(); ++e) {
    int& h = head[p.block_of(e)];
    if (h == 0) {
      h = e;
    } else {
      edges.push_back({h, e});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline std::vector<int> heads(const SetPartition& p) {
  std::vector<int> out;
  int top = 0;
  for (int e = 1; e <= p.size(); ++e) {
    if (p.block_of(e) > top) {
      top = p.block_of(e);
      out.push_back(e);
    }
  }
  return out;
}

inline std::vector<int> singletons(const SetPartition& p) {
  std::vector<int> count(p.block_count() + 1, 0);
  for (int e = 1; e <= p.size(); ++e) ++count[p.block_of(e)];
  std::vector<int> out;
  for (int e = 1; e <= p.size(); ++e) {
    if (count[p.block_of(e)] == 1) out.push_back(e);
  }
  return out;
}

/// Restriction to a subset A of [n]: the t-th smallest member of A becomes t.
/// Blocks that lose every element disappear.
inline SetPartition restrict_to(const SetPartition& p, std::span<const int> subset) {
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("restriction set has repeated elements");
  }
  if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > p.size())) {
    throw DomainError("restriction set is not a subset of [" + std::to_string(p.size()) + "]");
  }
  std::vector<int> relabel(p.block_count() + 1, 0);
  std::vector<int> word;
  word.reserve(sorted.size());
  int next = 0;
  for (int e : sorted) {
    int& label = relabel[p.block_of(e)];
    if (label == 0) label = ++next;
    word.push_back(label);
  }
  return SetPartition::from_word(std::move(word));
}

/// Restriction to the integer interval [lo, hi] (empty when lo > hi).
inline SetPartition restrict_to_range(const SetPartition& p, int lo, int hi) {
  std::vector<int> subset;
  for (int e = lo; e <= hi; ++e) subset.push_back(e);
  return restrict_to(p, subset);
}

/// Restriction to [n] minus one element.
inline SetPartition remove_element(const SetPartition& p, int element) {
  if (element < 1 || element > p.size()) {
    throw DomainError("element " + std::to_string(element) + " is outside [" +
                      std::to_string(p.size()) + "]");
  }
  std::vector<int> subset;
  for (int e = 1; e <= p.size(); ++e) {
    if (e != element) subset.push_back(e);
  }
  return restrict_to(p, subset);
}

// --- text formats -----------------------------------------------------------

/// "1,2,3,1,2,1,4,4,4"
inline std::string to_word_string(const SetPartition& p) {
  std::string out;
  for (int e = 1; e <= p.size(); ++e) {
    if (e > 1) out += ',';
    out += std::to_string(p.block_of(e));
  }
  return out;
}

/// "1 4 6 / 2 5 / 3 / 7 8 9"
inline std::string to_block_string(const SetPartition& p) {
  std::string out;
  const auto blocks = p.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out += " / ";
    for (std::size_t k = 0; k < blocks[b].size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(blocks[b][k]);
    }
  }
  return out;
}

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

/// Parses a list of positive integers separated by `sep` or whitespace.
/// Each value is returned with its starting offset.
inline std::vector<std::pair<int, std::size_t>> parse_int_list(std::string_view text,
                                                               std::string_view separators) {
  std::vector<std::pair<int, std::size_t>> out;
  std::size_t pos = 0;
  bool expect_value = true;
  while (pos < text.size()) {
    const char c = text[pos];
    if (is_space(c)) {
      ++pos;
      continue;
    }
    if (c >= '0' && c <= '9') {
      if (!expect_value) throw ParseError("missing separator", pos);
      const std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError("integer too large", start);
        ++pos;
      }
      out.emplace_back(static_cast<int>(value), start);
      expect_value = separators.empty();
      continue;
    }
    if (separators.find(c) != std::string_view::npos) {
      if (expect_value) throw ParseError("unexpected separator", pos);
      expect_value = true;
      ++pos;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
  if (!out.empty() && expect_value && !separators.empty()) {
    throw ParseError("trailing separator", text.size());
  }
  return out;
}

}  // namespace detail

/// Accepts the comma-separated word form, a compact digit word such as 1213,
/// or the slash-separated block form.
inline SetPartition parse_partition(std::string_view text) {
  if (text.size() > 1 && text.find_first_not_of("0123456789") == std::string_view::npos) {
    std::vector<int> word;
    int top = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const int v = text[i] - '0';
      if (v < 1 || v > top + 1) throw ParseError("not a restricted growth word", i);
      top = std::max(top, v);
      word.push_back(v);
    }
    return SetPartition::from_word(std::move(word));
  }
  if (text.find(',') == std::string_view::npos) {
    // Block notation; a lone "1" is both the word and the block form of [1].
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
    std::vector<std::vector<int>> blocks;
    int n = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t slash = text.find('/', start);
      const std::string_view piece = text.substr(start, slash == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : slash - start);
      auto values = detail::parse_int_list(piece, "");
      if (values.empty()) throw ParseError("empty block", start);
      std::vector<int> block;
      for (auto [v, offset] : values) {
        if (v < 1) throw ParseError("elements are 1-based", start + offset);
        block.push_back(v);
        n = std::max(n, v);
      }
      blocks.push_back(std::move(block));
      if (slash == std::string_view::npos) break;
      start = slash + 1;
    }
    return SetPartition::from_blocks(blocks, n);
  }
  auto values = detail::parse_int_list(text, ",");
  std::vector<int> word;
  int top = 0;
  for (auto [v, offset] : values) {
    if (v < 1 || v > top + 1) throw ParseError("not a restricted growth word", offset);
    top = std::max(top, v);
    word.push_back(v);
  }
  return SetPartition::from_word(std::move(word));
}

}  // namespace partlab
