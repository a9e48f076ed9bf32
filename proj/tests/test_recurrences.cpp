#include "oracles.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/pattern.hpp"
#include "partlab/recurrences.hpp"
#include "partlab/statistics.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace partlab;

namespace {

BigInt naive_factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Signed Stirling numbers of the first kind from the rising product
// x(x-1)...(x-n+1).
BigInt naive_stirling1(int n, int k) {
  std::vector<BigInt> poly{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * i;
    }
    poly = next;
  }
  return k < static_cast<int>(poly.size()) ? poly[k] : BigInt(0);
}

// Stirling numbers of the second kind by inclusion-exclusion.
BigInt naive_stirling2(int n, int k) {
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(k, j) * boost::multiprecision::pow(BigInt(k - j), n);
    sum += j % 2 == 0 ? term : BigInt(-term);
  }
  return sum / naive_factorial(k);
}

bool first_heads(const SetPartition& p, int m) {
  for (int i = 1; i <= m; ++i)
    if (!p.is_head(i)) return false;
  return true;
}

}  // namespace

TEST(Recurrences, BasicNumbers) {
  EXPECT_EQ(factorial(10), BigInt(3628800));
  EXPECT_EQ(binomial(10, 3), BigInt(120));
  EXPECT_EQ(catalan(10), BigInt(16796));
  EXPECT_EQ(bell(10), BigInt(115975));
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(stirling1(n, k), naive_stirling1(n, k)) << n << "," << k;
      EXPECT_EQ(stirling2(n, k), naive_stirling2(n, k)) << n << "," << k;
    }
}

TEST(Recurrences, FkMatchesBruteForce) {
  for (int k = 2; k <= 5; ++k) {
    const auto tau = front_crossing_pattern(k);
    for (int n = 0; n <= 8; ++n) {
      BigInt count = 0;
      for (const auto& p : oracle::all_partitions(n)) count += oracle::occurrences(p, {tau.letters().begin(), tau.letters().end()}) == 0 ? 1 : 0;
      EXPECT_EQ(f_k(k, n), count) << "k=" << k << " n=" << n;
    }
  }
}

TEST(Recurrences, F2IsCatalan) {
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(f_k(2, n), catalan(n));
    EXPECT_EQ(f2_alt(n), catalan(n));
  }
}

TEST(Recurrences, F3AlternativeAndD2) {
  for (int n = 0; n <= 25; ++n) {
    EXPECT_EQ(f3_alt(n), f_k(3, n));
    EXPECT_EQ(d2(n), f_k(3, n));
  }
  // 12312-avoiding partitions.
  const std::vector<int> known{1, 1, 2, 5, 15, 51, 188, 731, 2950, 12235, 51822};
  for (int n = 0; n < static_cast<int>(known.size()); ++n) EXPECT_EQ(f_k(3, n), BigInt(known[n]));
}

TEST(Recurrences, LargeKIsBell) {
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(f_k(n + 2, n), bell(n));
}

TEST(Recurrences, DistantNoncrossingMatchesBruteForce) {
  for (int n = 0; n <= 9; ++n) {
    BigInt two = 0, three = 0;
    for (const auto& p : enumerate(n)) {
      two += oracle::distant_crossings(p, 2) == 0 ? 1 : 0;
      three += oracle::distant_crossings(p, 3) == 0 ? 1 : 0;
    }
    EXPECT_EQ(d2(n), two) << n;
    EXPECT_EQ(e3(n), three) << n;
    EXPECT_EQ(e3_raw(n), three) << n;
  }
}

TEST(Recurrences, HeadPrefixDescent) {
  for (int k = 2; k <= 4; ++k)
    for (int j = 1; j <= k - 1; ++j)
      for (int n = j; n <= 8; ++n) {
        BigInt count = 0;
        for (const auto& p : enumerate(n)) count += (oracle::front_crossings(p, k) == 0 && first_heads(p, j)) ? 1 : 0;
        EXPECT_EQ(h_k(k, j, n), count) << k << "," << j << "," << n;
        EXPECT_EQ(h_k_stirling(k, j, n), count) << k << "," << j << "," << n;
      }
  EXPECT_THROW(h_k(3, 3, 5), DomainError);
}

TEST(Recurrences, StirlingUnrollingOnRandomRows) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> value(-50, 50);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BigInt> row(16);
    for (auto& v : row) v = value(rng);
    // a(i, n) = a(i-1, n) - (i-1) a(i-1, n-1), built explicitly.
    std::vector<std::vector<BigInt>> a{row};
    for (int i = 2; i <= 6; ++i) {
      std::vector<BigInt> next(16, 0);
      for (int n = 1; n < 16; ++n) next[n] = a.back()[n] - BigInt(i - 1) * a.back()[n - 1];
      a.push_back(next);
    }
    for (int m = 1; m <= 6; ++m)
      for (int n = m; n < 16; ++n) {
        EXPECT_EQ(stirling_unrolled(m, n, [&](int t) { return row.at(t); }), a[m - 1][n]) << m << "," << n;
      }
  }
}

TEST(Recurrences, LatticeWeightSumIsStirling) {
  for (int m = 1; m <= 8; ++m)
    for (int r = 1; r <= m; ++r) EXPECT_EQ(lattice_weight_sum(m, r), naive_stirling1(m, r)) << m << "," << r;
}

TEST(Recurrences, HeadConstrainedCounts) {
  for (int m = 0; m <= 4; ++m)
    for (int n = m; n <= 9; ++n) {
      BigInt count = 0;
      for (const auto& p : enumerate(n)) count += first_heads(p, m) ? 1 : 0;
      EXPECT_EQ(p_heads(m, n), count) << m << "," << n;
      EXPECT_EQ(p_heads_binomial(m, n), count) << m << "," << n;
    }
  EXPECT_THROW(p_heads(3, 2), DomainError);
}

TEST(Recurrences, ThreeDistantKnownValues) {
  const std::vector<int> known{1, 1, 2, 5, 15, 52, 201, 841, 3726, 17213};
  for (int n = 0; n < static_cast<int>(known.size()); ++n) EXPECT_EQ(e3(n), BigInt(known[n])) << n;
}
