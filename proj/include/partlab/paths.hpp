#pragma once

#include "partlab/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace partlab {

enum class Step : char { Up = 'U', Horizontal = 'H', Down = 'D' };

/// A path of Up/Horizontal/Down steps that never goes below height 0 and
/// ends at height 0.
class MotzkinPath {
 public:
  MotzkinPath() = default;

  static MotzkinPath from_steps(std::vector<Step> steps) {
    int height = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      height += steps[i] == Step::Up ? 1 : steps[i] == Step::Down ? -1 : 0;
      if (height < 0) throw DomainError("Motzkin path drops below 0 at step " + std::to_string(i + 1));
    }
    if (height != 0) throw DomainError("Motzkin path ends at height " + std::to_string(height));
    MotzkinPath p;
    p.steps_ = std::move(steps);
    return p;
  }

  /// "UHD" form.
  static MotzkinPath parse(std::string_view text) {
    std::vector<Step> steps;
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case 'U': steps.push_back(Step::Up); break;
        case 'H': steps.push_back(Step::Horizontal); break;
        case 'D': steps.push_back(Step::Down); break;
        default: throw ParseError(std::string("bad step '") + text[i] + "'", i);
      }
    }
    return from_steps(std::move(steps));
  }

  [[nodiscard]] const std::vector<Step>& steps() const noexcept { return steps_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(steps_.size()); }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (Step s : steps_) out += static_cast<char>(s);
    return out;
  }

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// Horizontal weights b_0, b_1, ... and down-step weights lambda_1, lambda_2, ...,
/// each an explicit prefix followed by a constant tail.
class WeightScheme {
 public:
  WeightScheme(std::vector<std::int64_t> horizontal_prefix, std::int64_t horizontal_tail,
               std::vector<std::int64_t> down_prefix, std::int64_t down_tail)
      : b_(std::move(horizontal_prefix)),
        b_tail_(horizontal_tail),
        lambda_(std::move(down_prefix)),
        lambda_tail_(down_tail) {}

  /// All weights 1; weighted sums become Motzkin numbers.
  static WeightScheme uniform() { return WeightScheme({}, 1, {}, 1); }

  /// b = (1, 2, 3, 3, ...), lambda = (1, 2, 2, ...): the weights whose path
  /// sums count 3-distant noncrossing partitions.
  static WeightScheme three_distant() { return WeightScheme({1, 2}, 3, {1}, 2); }

  /// Weight of a horizontal step at height h >= 0.
  [[nodiscard]] std::int64_t horizontal(int h) const {
    return h < static_cast<int>(b_.size()) ? b_[h] : b_tail_;
  }

  /// Weight of a down step leaving height h >= 1.
  [[nodiscard]] std::int64_t down(int h) const {
    return h - 1 < static_cast<int>(lambda_.size()) ? lambda_[h - 1] : lambda_tail_;
  }

  /// First height from which both weight sequences are constant.
  [[nodiscard]] int stable_height() const {
    return static_cast<int>(std::max(b_.size(), lambda_.size()));
  }

 private:
  std::vector<std::int64_t> b_;
  std::int64_t b_tail_;
  std::vector<std::int64_t> lambda_;
  std::int64_t lambda_tail_;
};

/// Product of b_h over horizontal steps at height h and lambda_h over down
/// steps that start at height h; up steps weigh 1.
inline BigInt weight(const MotzkinPath& path, const WeightScheme& scheme) {
  BigInt w = 1;
  int height = 0;
  for (Step s : path.steps()) {
    switch (s) {
      case Step::Up: ++height; break;
      case Step::Horizontal: w *= scheme.horizontal(height); break;
      case Step::Down:
        w *= scheme.down(height);
        --height;
        break;
    }
  }
  return w;
}

namespace detail {

template <class Visit>
void motzkin_dfs(int remaining, int height, std::vector<Step>& prefix, Visit& visit) {
  if (remaining == 0) {
    if (height == 0) visit(prefix);
    return;
  }
  if (height > remaining) return;
  if (height + 1 <= remaining - 1) {
    prefix.push_back(Step::Up);
    motzkin_dfs(remaining - 1, height + 1, prefix, visit);
    prefix.pop_back();
  }
  prefix.push_back(Step::Horizontal);
  motzkin_dfs(remaining - 1, height, prefix, visit);
  prefix.pop_back();
  if (height > 0) {
    prefix.push_back(Step::Down);
    motzkin_dfs(remaining - 1, height - 1, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Calls `visit(const std::vector<Step>&)` once for every Motzkin path of
/// length n (order: U < H < D at each position).
template <class Visit>
void for_each_motzkin_path(int n, Visit&& visit) {
  if (n < 0) throw DomainError("negative path length");
  std::vector<Step> prefix;
  prefix.reserve(n);
  detail::motzkin_dfs(n, 0, prefix, visit);
}

inline std::vector<MotzkinPath> motzkin_paths(int n) {
  std::vector<MotzkinPath> out;
  for_each_motzkin_path(n, [&](const std::vector<Step>& steps) {
    out.push_back(MotzkinPath::from_steps(steps));
  });
  return out;
}

/// M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}.
inline BigInt motzkin_number(int n) {
  if (n < 0) throw DomainError("negative path length");
  std::vector<BigInt> m(n + 1);
  m[0] = 1;
  for (int i = 1; i <= n; ++i) {
    m[i] = m[i - 1];
    for (int k = 0; k <= i - 2; ++k) m[i] += m[k] * m[i - 2 - k];
  }
  return m[n];
}

/// Sum of path weights over all Motzkin paths of length n, by a height DP.
inline BigInt weighted_sum(int n, const WeightScheme& scheme) {
  if (n < 0) throw DomainError("negative path length");
  // at[h]: weighted count of prefixes ending at height h.
  std::vector<BigInt> at(n + 2);
  at[0] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(n + 2);
    for (int h = 0; h <= n; ++h) {
      if (at[h] == 0) continue;
      next[h + 1] += at[h];
      next[h] += at[h] * scheme.horizontal(h);
      if (h > 0) next[h - 1] += at[h] * scheme.down(h);
    }
    at = std::move(next);
  }
  return at[0];
}

/// Same sum by walking every path; each path weight is accumulated along
/// the walk.
inline BigInt weighted_sum_by_enumeration(int n, const WeightScheme& scheme) {
  if (n < 0) throw DomainError("negative path length");
  BigInt total = 0;
  std::vector<BigInt> prefix_weight(n + 1);
  prefix_weight[0] = 1;
  struct Walker {
    int n;
    const WeightScheme& scheme;
    std::vector<BigInt>& w;
    BigInt& total;
    void go(int pos, int height) {
      if (pos == n) {
        if (height == 0) total += w[pos];
        return;
      }
      const int remaining = n - pos;
      if (height > remaining) return;
      if (height + 1 <= remaining - 1) {
        w[pos + 1] = w[pos];
        go(pos + 1, height + 1);
      }
      w[pos + 1] = w[pos] * scheme.horizontal(height);
      go(pos + 1, height);
      if (height > 0) {
        w[pos + 1] = w[pos] * scheme.down(height);
        go(pos + 1, height - 1);
      }
    }
  };
  Walker{n, scheme, prefix_weight, total}.go(0, 0);
  return total;
}

// --- north/east lattice paths -----------------------------------------------

/// A monotone lattice path from (0,0) as a string over {E, N}.
struct LatticePath {
  std::string steps;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// All paths from (0,0) to (east, north), lexicographic with E < N.
inline std::vector<LatticePath> enumerate_ne_paths(int east, int north) {
  if (east < 0 || north < 0) throw DomainError("lattice path targets must be nonnegative");
  std::vector<LatticePath> out;
  std::string prefix;
  auto rec = [&](auto&& self, int e, int n) -> void {
    if (e == 0 && n == 0) {
      out.push_back({prefix});
      return;
    }
    if (e > 0) {
      prefix.push_back('E');
      self(self, e - 1, n);
      prefix.pop_back();
    }
    if (n > 0) {
      prefix.push_back('N');
      self(self, e, n - 1);
      prefix.pop_back();
    }
  };
  rec(rec, east, north);
  return out;
}

/// Product over steps: the t-th step weighs -t if north, 1 if east.
inline BigInt ne_weight(const LatticePath& path) {
  BigInt w = 1;
  for (std::size_t t = 0; t < path.steps.size(); ++t) {
    if (path.steps[t] == 'N') w *= -static_cast<long long>(t + 1);
  }
  return w;
}

}  // namespace partlab
