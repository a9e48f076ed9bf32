#pragma once

#include "partlab/numeric.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace partlab {

/// A named, grow-only memo table from index tuples to big integers. Lookups
/// and inserts are serialized by a recursive mutex so a computation may
/// re-enter its own table.
class SequenceTable {
 public:
  explicit SequenceTable(std::string name) : name_(std::move(name)) {}

  SequenceTable(const SequenceTable&) = delete;
  SequenceTable& operator=(const SequenceTable&) = delete;

  [[nodiscard]] const std::string& name() const noexcept { return name_; }

  template <class Compute>
  BigInt get(const std::vector<int>& key, Compute&& compute) {
    std::lock_guard lock(mutex_);
    if (const auto it = values_.find(key); it != values_.end()) return it->second;
    BigInt value = compute();
    values_.emplace(key, value);
    return value;
  }

  [[nodiscard]] std::size_t size() const {
    std::lock_guard lock(mutex_);
    return values_.size();
  }

 private:
  std::string name_;
  mutable std::recursive_mutex mutex_;
  std::map<std::vector<int>, BigInt> values_;
};

namespace detail {

inline SequenceTable& table(const char* name) {
  static std::mutex registry_mutex;
  static std::map<std::string, std::unique_ptr<SequenceTable>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[name];
  if (!slot) slot = std::make_unique<SequenceTable>(name);
  return *slot;
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

// Zero outside 0 <= k <= n; used where the formulas index past the triangle.
inline BigInt stirling2_or_zero(int n, int k);
inline BigInt stirling1_or_zero(int n, int k);

}  // namespace detail

inline BigInt factorial(int n) {
  detail::require(n >= 0, "factorial of a negative number");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// (1/(n+1)) * C(2n, n).
inline BigInt catalan(int n) {
  detail::require(n >= 0, "catalan index must be nonnegative");
  return binomial(2 * n, n) / (n + 1);
}

/// Partitions of [n] into k blocks.
inline BigInt stirling2(int n, int k) {
  detail::require(n >= 0 && k >= 0 && k <= n,
                  "stirling2 needs 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  return detail::stirling2_or_zero(n, k);
}

/// Signed Stirling numbers of the first kind: (-1)^(n-k) times the number of
/// permutations of [n] with k cycles.
inline BigInt stirling1(int n, int k) {
  detail::require(n >= 0 && k >= 0 && k <= n,
                  "stirling1 needs 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  return detail::stirling1_or_zero(n, k);
}

namespace detail {

inline BigInt stirling2_or_zero(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  return table("S").get({n, k}, [&] {
    return BigInt(k) * stirling2_or_zero(n - 1, k) + stirling2_or_zero(n - 1, k - 1);
  });
}

inline BigInt stirling1_or_zero(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  return table("s").get({n, k}, [&] {
    return stirling1_or_zero(n - 1, k - 1) - BigInt(n - 1) * stirling1_or_zero(n - 1, k);
  });
}

}  // namespace detail

/// Sum over north/east lattice paths from (0,0) to (r-1, m-r) of the product
/// of step weights, where the t-th step weighs -t if north and 1 if east.
/// Computed by a DP over end points.
inline BigInt lattice_weight_sum(int m, int r) {
  detail::require(r >= 1 && r <= m, "lattice_weight_sum needs 1 <= r <= m");
  const int east = r - 1;
  const int north = m - r;
  // sum[x][y]: weighted count of paths ending at (x, y); the step into (x, y)
  // is step number x + y.
  std::vector<std::vector<BigInt>> sum(east + 1, std::vector<BigInt>(north + 1));
  sum[0][0] = 1;
  for (int x = 0; x <= east; ++x) {
    for (int y = 0; y <= north; ++y) {
      if (x == 0 && y == 0) continue;
      BigInt total = 0;
      if (x > 0) total += sum[x - 1][y];
      if (y > 0) total -= BigInt(x + y) * sum[x][y - 1];
      sum[x][y] = std::move(total);
    }
  }
  return sum[east][north];
}

/// Number of 12...k12-avoiding (k-front noncrossing) partitions of [n], from the
/// recurrence that splits on the block of n:
///   f(n) = (k-1) f(n-1) + sum_{i=1}^{k-3} (i+2-k) S(n-1, i)
///        + sum_{i=k-2}^{n-2} (f(i) - sum_{j=1}^{k-3} S(i, j))
///                            * sum_{r=1}^{k-1} s(k-1, r) f(n-2-i+r),
/// with f(0) = f(1) = 1.
inline BigInt f_k(int k, int n) {
  detail::require(k >= 2, "f_k needs k >= 2");
  detail::require(n >= 0, "f_k needs n >= 0");
  if (n <= 1) return 1;
  return detail::table("f_k").get({k, n}, [&] {
    BigInt value = BigInt(k - 1) * f_k(k, n - 1);
    for (int i = 1; i <= k - 3; ++i) value += BigInt(i + 2 - k) * detail::stirling2_or_zero(n - 1, i);
    for (int i = k - 2; i <= n - 2; ++i) {
      BigInt many_blocks = f_k(k, i);
      for (int j = 1; j <= k - 3; ++j) many_blocks -= detail::stirling2_or_zero(i, j);
      BigInt heads_first = 0;
      for (int r = 1; r <= k - 1; ++r) {
        heads_first += detail::stirling1_or_zero(k - 1, r) * f_k(k, n - 2 - i + r);
      }
      value += many_blocks * heads_first;
    }
    return value;
  });
}

namespace detail {

inline void check_h_k_args(int k, int j, int n) {
  require(k >= 2, "h_k needs k >= 2");
  require(j >= 1 && j <= k - 1, "h_k needs 1 <= j <= k-1, got j=" + std::to_string(j));
  require(n >= j, "h_k needs n >= j");
}

}  // namespace detail

/// k-front noncrossing partitions of [n] whose first j elements are heads,
/// by descending h(j, n) = h(j-1, n) - (j-1) h(j-1, n-1) to h(1, n) = f_k(n).
inline BigInt h_k(int k, int j, int n) {
  detail::check_h_k_args(k, j, n);
  if (j == 1) return f_k(k, n);
  return detail::table("h_k").get({k, j, n}, [&] {
    return h_k(k, j - 1, n) - BigInt(j - 1) * h_k(k, j - 1, n - 1);
  });
}

/// Same count via the unrolled form sum_{r=1}^{j} s(j, r) f_k(n - j + r).
inline BigInt h_k_stirling(int k, int j, int n) {
  detail::check_h_k_args(k, j, n);
  BigInt value = 0;
  for (int r = 1; r <= j; ++r) value += detail::stirling1_or_zero(j, r) * f_k(k, n - j + r);
  return value;
}

/// Closed form of the tableau a(i, n) = a(i-1, n) - (i-1) a(i-1, n-1):
/// a(m, n) = sum_{r=1}^{m} s(m, r) a(1, n - m + r).
inline BigInt stirling_unrolled(int m, int n, const std::function<BigInt(int)>& first_row) {
  detail::require(m >= 1, "stirling_unrolled needs m >= 1");
  BigInt value = 0;
  for (int r = 1; r <= m; ++r) value += detail::stirling1_or_zero(m, r) * first_row(n - m + r);
  return value;
}

/// f_2(n) = 2 f_2(n-1) + sum_{i=2}^{n-1} f_2(n-1-i) (f_2(i) - f_2(i-1)).
inline BigInt f2_alt(int n) {
  detail::require(n >= 0, "f2_alt needs n >= 0");
  if (n <= 1) return 1;
  return detail::table("f2_alt").get({n}, [&] {
    BigInt value = 2 * f2_alt(n - 1);
    for (int i = 2; i <= n - 1; ++i) value += f2_alt(n - 1 - i) * (f2_alt(i) - f2_alt(i - 1));
    return value;
  });
}

/// f_3(n) = 2 f_3(n-1) + sum_{i=2}^{n-1} f_3(n-i) (f_3(i) - f_3(i-1)).
inline BigInt f3_alt(int n) {
  detail::require(n >= 0, "f3_alt needs n >= 0");
  if (n <= 1) return 1;
  return detail::table("f3_alt").get({n}, [&] {
    BigInt value = 2 * f3_alt(n - 1);
    for (int i = 2; i <= n - 1; ++i) value += f3_alt(n - i) * (f3_alt(i) - f3_alt(i - 1));
    return value;
  });
}

/// 2-distant noncrossing partitions of [n]:
/// d(n) = 2 d(n-1) + sum_{i=2}^{n-1} d(n-i) (d(i) - d(i-1)).
inline BigInt d2(int n) {
  detail::require(n >= 0, "d2 needs n >= 0");
  if (n <= 1) return 1;
  return detail::table("d2").get({n}, [&] {
    BigInt value = 2 * d2(n - 1);
    for (int i = 2; i <= n - 1; ++i) value += d2(n - i) * (d2(i) - d2(i - 1));
    return value;
  });
}

/// 3-distant noncrossing partitions of [n]:
/// e(n) = 2 e(n-1) + sum_{i=2}^{n-1} ( e(n-i)(e(i-1) - e(i-2))
///                   + (e(n+1-i) - e(n-i))(e(i) - 3e(i-1) + 2e(i-2)) ).
inline BigInt e3(int n) {
  detail::require(n >= 0, "e3 needs n >= 0");
  if (n <= 1) return 1;
  return detail::table("e3").get({n}, [&] {
    BigInt value = 2 * e3(n - 1);
    for (int i = 2; i <= n - 1; ++i) {
      value += e3(n - i) * (e3(i - 1) - e3(i - 2)) +
               (e3(n + 1 - i) - e3(n - i)) * (e3(i) - 3 * e3(i - 1) + 2 * e3(i - 2));
    }
    return value;
  });
}

/// The same sequence before folding the i = 2 summand into the leading term:
/// e(n) = 3 e(n-1) - e(n-2) + sum_{i=3}^{n-1} (...).
inline BigInt e3_raw(int n) {
  detail::require(n >= 0, "e3_raw needs n >= 0");
  if (n <= 1) return 1;
  return detail::table("e3_raw").get({n}, [&] {
    BigInt value = 3 * e3_raw(n - 1) - e3_raw(n - 2);
    for (int i = 3; i <= n - 1; ++i) {
      value += e3_raw(n - i) * (e3_raw(i - 1) - e3_raw(i - 2)) +
               (e3_raw(n + 1 - i) - e3_raw(n - i)) *
                   (e3_raw(i) - 3 * e3_raw(i - 1) + 2 * e3_raw(i - 2));
    }
    return value;
  });
}

/// Bell numbers from the Bell triangle.
inline BigInt bell(int n) {
  detail::require(n >= 0, "bell needs n >= 0");
  return detail::table("bell").get({n}, [&] {
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
      std::vector<BigInt> next{row.back()};
      for (const auto& v : row) next.push_back(next.back() + v);
      row = std::move(next);
    }
    return row.front();
  });
}

/// Partitions of [n] in which 1..m are all heads, as
/// sum_{r=1}^{m} s(m, r) bell(n - m + r). m = 0 imposes nothing.
inline BigInt p_heads(int m, int n) {
  detail::require(m >= 0 && m <= n, "p_heads needs 0 <= m <= n");
  if (m <= 1) return bell(n);
  BigInt value = 0;
  for (int r = 1; r <= m; ++r) value += detail::stirling1_or_zero(m, r) * bell(n - m + r);
  return value;
}

/// Same count via p(m, m+t) = sum_{i=0}^{t} C(t, i) m^i bell(t - i), t = n - m.
inline BigInt p_heads_binomial(int m, int n) {
  detail::require(m >= 0 && m <= n, "p_heads needs 0 <= m <= n");
  const int t = n - m;
  BigInt value = 0;
  BigInt power = 1;
  for (int i = 0; i <= t; ++i) {
    value += binomial(t, i) * power * bell(t - i);
    power *= m;
  }
  return value;
}

}  // namespace partlab
