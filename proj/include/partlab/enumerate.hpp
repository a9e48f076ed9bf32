#pragma once

#include "partlab/partition.hpp"

#include <cstddef>
#include <iterator>
#include <vector>

namespace partlab {

/// Walks Π_n in lexicographic order of canonical words. With a non-empty
/// prefix only the partitions whose word starts with that prefix are visited,
/// so disjoint prefixes give disjoint shards of a sweep.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n, std::vector<int> prefix = {}) : n_(n) {
    if (n < 0) throw DomainError("negative ground-set size");
    if (static_cast<int>(prefix.size()) > n) throw DomainError("prefix longer than n");
    fixed_ = static_cast<int>(prefix.size());
    std::vector<int> word = std::move(prefix);
    word.resize(n, 1);
    current_ = SetPartition::from_word(std::move(word));
    running_max_.resize(n);
    int top = 0;
    for (int i = 0; i < n; ++i) {
      top = std::max(top, current_.word_[i]);
      running_max_[i] = top;
    }
  }

  [[nodiscard]] const SetPartition& current() const noexcept { return current_; }
  [[nodiscard]] bool done() const noexcept { return done_; }

  /// Advances; returns false once the range is exhausted.
  bool next() {
    if (done_) return false;
    auto& w = current_.word_;
    for (int i = n_ - 1; i >= std::max(fixed_, 1); --i) {
      if (w[i] <= running_max_[i - 1]) {
        ++w[i];
        running_max_[i] = std::max(running_max_[i - 1], w[i]);
        for (int j = i + 1; j < n_; ++j) {
          w[j] = 1;
          running_max_[j] = running_max_[i];
        }
        current_.blocks_ = running_max_[n_ - 1];
        return true;
      }
    }
    done_ = true;
    return false;
  }

 private:
  int n_;
  int fixed_ = 0;
  bool done_ = false;
  SetPartition current_;
  std::vector<int> running_max_;
};

/// Input range over Π_n (optionally restricted to a word prefix).
class Partitions {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SetPartition;
    using difference_type = std::ptrdiff_t;
    using pointer = const SetPartition*;
    using reference = const SetPartition&;

    iterator() = default;
    explicit iterator(PartitionEnumerator* e) : e_(e) {}

    reference operator*() const { return e_->current(); }
    pointer operator->() const { return &e_->current(); }
    iterator& operator++() {
      if (!e_->next()) e_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.e_ == b.e_; }

   private:
    PartitionEnumerator* e_ = nullptr;
  };

  explicit Partitions(int n, std::vector<int> prefix = {}) : e_(n, std::move(prefix)) {}

  iterator begin() { return iterator(&e_); }
  iterator end() { return iterator(); }

 private:
  PartitionEnumerator e_;
};

inline Partitions enumerate(int n, std::vector<int> prefix = {}) {
  return Partitions(n, std::move(prefix));
}

/// Every restricted growth word of the given length, lexicographically.
/// Used as shard keys for parallel sweeps.
inline std::vector<std::vector<int>> word_prefixes(int length) {
  std::vector<std::vector<int>> out;
  for (const auto& p : enumerate(length)) {
    out.emplace_back(p.word().begin(), p.word().end());
  }
  return out;
}

}  // namespace partlab
