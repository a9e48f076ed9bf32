#pragma once

#include "partlab/partition.hpp"
#include "partlab/statistics.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partlab {

/// Replaces the t-th smallest distinct letter with t ("24552" -> "12331").
inline std::vector<int> pattern_of(std::span<const int> word) {
  std::vector<int> values(word.begin(), word.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int w : word) {
    out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), w) -
                                   values.begin()) + 1);
  }
  return out;
}

/// A word whose distinct letters are exactly {1..t}.
class PatternWord {
 public:
  PatternWord() = default;

  /// Letters that are not already a pattern are normalized with pattern_of;
  /// normalized() reports whether that happened.
  explicit PatternWord(std::vector<int> letters) : letters_(pattern_of(letters)) {
    normalized_ = letters_ != letters;
    for (int l : letters_) distinct_ = std::max(distinct_, l);
  }

  /// "1212" (one digit per letter) or "1,2,1,2".
  static PatternWord parse(std::string_view text) {
    std::vector<int> letters;
    if (text.find(',') != std::string_view::npos) {
      for (auto [v, offset] : detail::parse_int_list(text, ",")) {
        if (v < 1) throw ParseError("pattern letters are positive", offset);
        letters.push_back(v);
      }
    } else {
      for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (detail::is_space(c)) continue;
        if (c < '1' || c > '9') throw ParseError(std::string("bad pattern letter '") + c + "'", i);
        letters.push_back(c - '0');
      }
    }
    if (letters.empty()) throw ParseError("empty pattern", 0);
    return PatternWord(std::move(letters));
  }

  [[nodiscard]] std::span<const int> letters() const noexcept { return letters_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(letters_.size()); }
  [[nodiscard]] int distinct() const noexcept { return distinct_; }
  [[nodiscard]] bool normalized() const noexcept { return normalized_; }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    const bool wide = distinct_ > 9;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (wide && i > 0) out += ',';
      out += std::to_string(letters_[i]);
    }
    return out;
  }

  friend bool operator==(const PatternWord& a, const PatternWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<int> letters_;
  int distinct_ = 0;
  bool normalized_ = false;
};

/// The pattern 1 2 ... k 1 2.
inline PatternWord front_crossing_pattern(int k) {
  if (k < 2) throw DomainError("front crossing pattern needs k >= 2");
  std::vector<int> letters;
  for (int i = 1; i <= k; ++i) letters.push_back(i);
  letters.push_back(1);
  letters.push_back(2);
  return PatternWord(std::move(letters));
}

namespace detail {

// An occurrence of a pattern with t letters is fixed by the values v_1 < ... < v_t
// standing for its letters; this visits every increasing value choice drawn
// from {1..top} and stops early when `visit` returns false.
template <class Visit>
void for_each_letter_assignment(int t, int top, Visit&& visit) {
  if (t > top) return;
  std::vector<int> values(t);
  for (int i = 0; i < t; ++i) values[i] = i + 1;
  while (true) {
    if (!visit(std::span<const int>(values))) return;
    int i = t - 1;
    while (i >= 0 && values[i] == top - (t - 1 - i)) --i;
    if (i < 0) return;
    ++values[i];
    for (int j = i + 1; j < t; ++j) values[j] = values[j - 1] + 1;
  }
}

}  // namespace detail

/// True iff no subsequence of the canonical word has pattern `tau`.
inline bool avoids(const SetPartition& p, const PatternWord& tau) {
  const auto word = p.word();
  const auto letters = tau.letters();
  bool found = false;
  detail::for_each_letter_assignment(tau.distinct(), p.block_count(), [&](std::span<const int> v) {
    // Greedy leftmost matching decides subsequence containment.
    std::size_t k = 0;
    for (int a : word) {
      if (k < letters.size() && a == v[letters[k] - 1]) ++k;
    }
    found = k == letters.size();
    return !found;
  });
  return !found;
}

/// Number of subsequences of the canonical word whose pattern is `tau`.
inline std::uint64_t count_occurrences(const SetPartition& p, const PatternWord& tau) {
  const auto word = p.word();
  const auto letters = tau.letters();
  std::uint64_t total = 0;
  std::vector<std::uint64_t> ways(letters.size() + 1);
  detail::for_each_letter_assignment(tau.distinct(), p.block_count(), [&](std::span<const int> v) {
    std::fill(ways.begin(), ways.end(), 0);
    ways[0] = 1;
    for (int a : word) {
      for (std::size_t k = letters.size(); k >= 1; --k) {
        if (a == v[letters[k - 1] - 1]) ways[k] += ways[k - 1];
      }
    }
    total += ways[letters.size()];
    return true;
  });
  return total;
}

/// No k-front crossing; equivalently the word avoids 1 2 ... k 1 2.
inline bool is_k_front_noncrossing(const SetPartition& p, int k) {
  detail::require_at_least(k, 2, "k-front noncrossing");
  return fcr(p, k) == 0;
}

}  // namespace partlab
