#pragma once

#include "partlab/enumerate.hpp"
#include "partlab/fillings.hpp"
#include "partlab/generating_functions.hpp"
#include "partlab/paths.hpp"
#include "partlab/pattern.hpp"
#include "partlab/recurrences.hpp"
#include "partlab/series.hpp"
#include "partlab/statistics.hpp"
#include "partlab/sweep.hpp"
#include "partlab/trees.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partlab {

/// Outcome of one verification check.
struct VerificationReport {
  std::string check;
  std::string title;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool passed = true;
  std::optional<std::string> witness;  // first counterexample
  double seconds = 0;
  std::vector<std::string> details;
};

/// A requested bound above the hard cap of a check.
class CapExceeded : public DomainError {
 public:
  CapExceeded(const std::string& what, int cap) : DomainError(what), cap_(cap) {}
  [[nodiscard]] int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

/// Hard cap on exhaustive sweeps over Π_n; PARTLAB_MAX_N overrides it.
inline int max_brute_n() {
  if (const char* env = std::getenv("PARTLAB_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return 12;
}

enum class BoundKind { Brute, Series, Cells };

inline int bound_cap(BoundKind kind) {
  switch (kind) {
    case BoundKind::Brute: return max_brute_n();
    case BoundKind::Series: return 100;
    case BoundKind::Cells: return kMaxFillingCells;
  }
  return 0;
}

/// Collects expectations for one check run.
class CheckRun {
 public:
  CheckRun(int bound, int jobs) : bound_(bound), jobs_(jobs) {}

  [[nodiscard]] int bound() const noexcept { return bound_; }
  [[nodiscard]] int jobs() const noexcept { return jobs_; }
  [[nodiscard]] bool passed() const noexcept { return !witness_; }
  [[nodiscard]] const std::optional<std::string>& witness() const noexcept { return witness_; }
  [[nodiscard]] const std::vector<std::string>& details() const noexcept { return details_; }

  /// Records the first failure; the witness is only built on failure.
  template <class Witness>
  bool expect(bool ok, Witness&& witness) {
    if (!ok && !witness_) witness_ = std::string(witness());
    return ok;
  }

  void note(std::string line) { details_.push_back(std::move(line)); }

 private:
  int bound_;
  int jobs_;
  std::optional<std::string> witness_;
  std::vector<std::string> details_;
};

/// Counters plus the lexicographically first flagged partition of a sweep.
struct Tally {
  std::vector<std::uint64_t> counts;
  std::optional<SetPartition> witness;
  std::string reason;

  void bump(std::size_t slot, std::uint64_t by = 1) {
    if (counts.size() <= slot) counts.resize(slot + 1, 0);
    counts[slot] += by;
  }

  [[nodiscard]] std::uint64_t at(std::size_t slot) const { return slot < counts.size() ? counts[slot] : 0; }

  void flag(const SetPartition& p, std::string why) {
    if (witness) return;
    witness = p;
    reason = std::move(why);
  }

  void merge(const Tally& other) {
    for (std::size_t s = 0; s < other.counts.size(); ++s) bump(s, other.counts[s]);
    if (!witness && other.witness) {
      witness = other.witness;
      reason = other.reason;
    }
  }
};

namespace detail {

template <class Acc, class Visit>
Acc sweep_into(int n, int jobs, Visit visit) {
  return sweep<Acc>(
      n, jobs,
      [&](Acc& acc, const SetPartition& p) {
        try {
          visit(acc, p);
        } catch (const std::exception& e) {
          acc.flag(p, e.what());
        }
      },
      [](Acc& total, const Acc& shard) { total.merge(shard); });
}

inline std::string flagged(const Tally& t) { return to_word_string(*t.witness) + ": " + t.reason; }

inline std::string mismatch(std::string_view what, int n, const BigInt& a, const BigInt& b) {
  return std::string(what) + " at n=" + std::to_string(n) + ": " + a.str() + " vs " + b.str();
}

inline std::string histogram_string(const JointHistogram& h) {
  std::string out;
  for (const auto& [key, count] : h.cells()) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + "):" + std::to_string(count);
  }
  return out;
}

inline bool block_sizes_by_head_equal(const SetPartition& a, const SetPartition& b) {
  auto sizes = [](const SetPartition& p) {
    std::vector<std::pair<int, std::size_t>> out;
    for (const auto& block : p.blocks()) out.emplace_back(block.front(), block.size());
    return out;
  };
  return sizes(a) == sizes(b);
}

}  // namespace detail

// --- the checks ---------------------------------------------------------------

namespace checks {

inline void avoidance_recurrence(CheckRun& run) {
  std::array<PatternWord, 4> patterns{front_crossing_pattern(2), front_crossing_pattern(3),
                                      front_crossing_pattern(4), front_crossing_pattern(5)};
  for (int n = 0; n <= run.bound(); ++n) {
    const auto t = detail::sweep_into<Tally>(n, run.jobs(), [&](Tally& acc, const SetPartition& p) {
      for (int k = 2; k <= 5; ++k) {
        const bool a = avoids(p, patterns[k - 2]);
        if (a) acc.bump(k);
        if (k <= 4 && a != (fcr(p, k) == 0)) acc.flag(p, "avoidance and fcr disagree for k=" + std::to_string(k));
      }
    });
    run.expect(!t.witness, [&] { return detail::flagged(t); });
    for (int k = 2; k <= 5; ++k) {
      const BigInt expected = f_k(k, n);
      run.expect(BigInt(t.at(k)) == expected,
                 [&] { return detail::mismatch("f_" + std::to_string(k), n, expected, BigInt(t.at(k))); });
    }
  }
  run.note("f_k(n) = #12..k12-avoiders for k=2..5, n<=" + std::to_string(run.bound()));
}

inline void catalan_recurrence(CheckRun& run) {
  for (int n = 0; n <= run.bound(); ++n) {
    run.expect(f2_alt(n) == catalan(n), [&] { return detail::mismatch("f2_alt vs Catalan", n, f2_alt(n), catalan(n)); });
    run.expect(f_k(2, n) == catalan(n), [&] { return detail::mismatch("f_2 vs Catalan", n, f_k(2, n), catalan(n)); });
  }
}

inline void gf_fk_check(CheckRun& run) {
  for (int k = 2; k <= 5; ++k) {
    const auto coeffs = integer_coefficients(gf_fk(k, run.bound()));
    for (int n = 0; n <= run.bound(); ++n) {
      run.expect(coeffs[n] == f_k(k, n),
                 [&] { return detail::mismatch("gf_f" + std::to_string(k), n, coeffs[n], f_k(k, n)); });
    }
  }
}

inline void f3_recurrence(CheckRun& run) {
  for (int n = 0; n <= run.bound(); ++n) {
    run.expect(f3_alt(n) == f_k(3, n), [&] { return detail::mismatch("f3_alt vs f_3", n, f3_alt(n), f_k(3, n)); });
  }
}

inline void gf_d2_check(CheckRun& run) {
  const auto coeffs = integer_coefficients(gf_d2(run.bound()));
  const auto f3 = integer_coefficients(gf_fk(3, run.bound()));
  for (int n = 0; n <= run.bound(); ++n) {
    run.expect(coeffs[n] == d2(n), [&] { return detail::mismatch("gf_d2 vs d2", n, coeffs[n], d2(n)); });
    run.expect(coeffs[n] == f3[n], [&] { return detail::mismatch("gf_d2 vs gf_f3", n, coeffs[n], f3[n]); });
  }
}

inline void heads_descent_brute(CheckRun& run) {
  for (int n = 1; n <= run.bound(); ++n) {
    // slot 4*(k-2) + (j-1)
    const auto t = detail::sweep_into<Tally>(n, run.jobs(), [&](Tally& acc, const SetPartition& p) {
      int leading_heads = 0;
      while (leading_heads < n && p.block_of(leading_heads + 1) == leading_heads + 1) ++leading_heads;
      for (int k = 2; k <= 5; ++k) {
        if (fcr(p, k) != 0) continue;
        for (int j = 1; j <= std::min(k - 1, leading_heads); ++j) acc.bump(4 * (k - 2) + (j - 1));
      }
    });
    run.expect(!t.witness, [&] { return detail::flagged(t); });
    for (int k = 2; k <= 5; ++k) {
      for (int j = 1; j <= k - 1 && j <= n; ++j) {
        const BigInt got(t.at(4 * (k - 2) + (j - 1)));
        run.expect(h_k(k, j, n) == got, [&] {
          return detail::mismatch("h_" + std::to_string(k) + "(" + std::to_string(j) + ",n)", n, h_k(k, j, n), got);
        });
      }
    }
  }
}

inline void unrolling_property(CheckRun& run) {
  const int width = run.bound() + 8;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-50, 50);
    std::vector<BigInt> first(width + 1);
    for (auto& v : first) v = dist(rng);
    // a[i][j] for i = 1..m, j = i-1..width.
    std::vector<std::vector<BigInt>> a(run.bound() + 1, std::vector<BigInt>(width + 1));
    a[1] = first;
    for (int i = 2; i <= run.bound(); ++i) {
      for (int j = i - 1; j <= width; ++j) a[i][j] = a[i - 1][j] - BigInt(i - 1) * a[i - 1][j - 1];
    }
    for (int m = 1; m <= run.bound(); ++m) {
      for (int n = m - 1; n <= width; ++n) {
        const BigInt closed = stirling_unrolled(m, n, [&](int j) { return first.at(j); });
        run.expect(closed == a[m][n], [&] {
          return "seed " + std::to_string(seed) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                 ": " + closed.str() + " vs " + a[m][n].str();
        });
      }
    }
  }
  run.note("25 random first rows, m<=" + std::to_string(run.bound()));
}

inline void lattice_paths_check(CheckRun& run) {
  for (int m = 1; m <= run.bound(); ++m) {
    for (int r = 1; r <= m; ++r) {
      BigInt by_paths = 0;
      for (const auto& path : enumerate_ne_paths(r - 1, m - r)) by_paths += ne_weight(path);
      const BigInt dp = lattice_weight_sum(m, r);
      const BigInt s = stirling1(m, r);
      run.expect(dp == s && by_paths == s, [&] {
        return "m=" + std::to_string(m) + " r=" + std::to_string(r) + ": paths " + by_paths.str() + ", dp " +
               dp.str() + ", s(m,r) " + s.str();
      });
    }
  }
}

inline void heads_closed_sum(CheckRun& run) {
  for (int k = 2; k <= 5; ++k) {
    for (int j = 1; j <= k - 1; ++j) {
      for (int n = j; n <= run.bound(); ++n) {
        run.expect(h_k(k, j, n) == h_k_stirling(k, j, n), [&] {
          return "k=" + std::to_string(k) + " j=" + std::to_string(j) + " n=" + std::to_string(n) + ": " +
                 h_k(k, j, n).str() + " vs " + h_k_stirling(k, j, n).str();
        });
      }
    }
  }
}

inline void heads_prefix_brute(CheckRun& run) {
  for (int n = 0; n <= run.bound(); ++n) {
    const auto t = detail::sweep_into<Tally>(n, run.jobs(), [&](Tally& acc, const SetPartition& p) {
      int leading_heads = 0;
      while (leading_heads < n && p.block_of(leading_heads + 1) == leading_heads + 1) ++leading_heads;
      for (int m = 0; m <= std::min(4, leading_heads); ++m) acc.bump(m);
    });
    for (int m = 0; m <= std::min(4, n); ++m) {
      const BigInt got(t.at(m));
      run.expect(p_heads(m, n) == got && p_heads_binomial(m, n) == got, [&] {
        return "p(" + std::to_string(m) + "," + std::to_string(n) + "): sum " + p_heads(m, n).str() +
               ", binomial " + p_heads_binomial(m, n).str() + ", brute " + got.str();
      });
    }
    if (n >= 1) run.expect(p_heads(1, n) == bell(n), [&] { return detail::mismatch("p(1,n) vs bell", n, p_heads(1, n), bell(n)); });
  }
}

inline void heads_egf(CheckRun& run) {
  for (int m = 0; m <= 5; ++m) {
    const auto s = egf_p_heads(m, run.bound());
    for (int n = 0; n <= run.bound(); ++n) {
      const Rational scaled = s[n] * Rational(factorial(n));
      run.expect(scaled == Rational(p_heads(m, m + n)), [&] {
        return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": n!*coefficient " + scaled.str() +
               " vs " + p_heads(m, m + n).str();
      });
    }
  }
}

/// The stated block statistic (leaves plus middle-child vertices) is tested
/// last. It cannot hold for any bijection: from n=3 on, its distribution over
/// the constrained trees differs from the block-count distribution. The
/// identity that does hold also counts right-only vertices whose child has a
/// left or right child.
inline void phi_bijection(CheckRun& run) {
  std::optional<std::string> literal;
  std::uint64_t literal_misses = 0;
  std::uint64_t total = 0;
  for (int n = 1; n <= run.bound(); ++n) {
    std::set<std::string> image;
    for (const auto& p : enumerate(n)) {
      if (fcr(p, 2) != 0) continue;
      const auto t = phi(p);
      const auto st = tree_stats(t);
      const auto w = to_word_string(p);
      ++total;
      run.expect(is_phi_tree(t) && t.vertex_count() == n, [&] { return w + ": invalid tree " + t.to_string(); });
      run.expect(st.leaves + st.middle_children + st.right_over_branching == p.block_count(),
                 [&] { return w + ": corrected block statistic"; });
      if (st.leaves + st.middle_children != p.block_count()) {
        ++literal_misses;
        if (!literal) {
          literal = w + ": leaves+middle = " + std::to_string(st.leaves + st.middle_children) + " but " +
                    std::to_string(p.block_count()) + " blocks (tree " + t.to_string() + ")";
        }
      }
      run.expect(phi_inverse(t) == p, [&] { return w + ": round trip gives " + to_word_string(phi_inverse(t)); });
      image.insert(t.to_string());
    }
    std::set<std::string> valid;
    for (const auto& t : phi_trees(n)) valid.insert(t.to_string());
    run.expect(image == valid, [&] { return "image differs from constrained trees at n=" + std::to_string(n); });
    run.expect(BigInt(image.size()) == catalan(n),
               [&] { return detail::mismatch("image size vs Catalan", n, BigInt(image.size()), catalan(n)); });
  }
  run.note("leaves+middle+right-over-branching = blocks on all " + std::to_string(total) + " partitions");
  run.note("leaves+middle = blocks fails on " + std::to_string(literal_misses) + " of them");
  run.expect(!literal, [&] { return "stated block statistic: " + *literal; });
}

inline void d2_recurrence(CheckRun& run) {
  for (int n = 0; n <= run.bound(); ++n) {
    const auto t = detail::sweep_into<Tally>(n, run.jobs(), [](Tally& acc, const SetPartition& p) {
      if (dcr(p, 2) == 0) acc.bump(0);
    });
    run.expect(BigInt(t.at(0)) == d2(n), [&] { return detail::mismatch("d2 vs brute", n, d2(n), BigInt(t.at(0))); });
  }
  const auto coeffs = integer_coefficients(gf_d2(25));
  for (int n = 0; n <= 25; ++n) {
    run.expect(coeffs[n] == d2(n), [&] { return detail::mismatch("d2 vs series", n, d2(n), coeffs[n]); });
    run.expect(d2(n) == f_k(3, n), [&] { return detail::mismatch("d2 vs f_3", n, d2(n), f_k(3, n)); });
  }
}

inline void psi_bijection(CheckRun& run) {
  for (int n = 1; n <= run.bound(); ++n) {
    std::set<std::string> image;
    for (const auto& p : enumerate(n)) {
      if (dcr(p, 2) != 0) continue;
      const auto t = psi(p);
      const auto st = tree_stats(t);
      const auto w = to_word_string(p);
      run.expect(is_psi_tree(t) && st.unfulfilled() == n, [&] { return w + ": invalid tree " + t.to_string(); });
      run.expect(st.leaves + st.left_only - st.fulfilled == p.block_count(), [&] { return w + ": block statistic"; });
      run.expect(st.fulfilled_left_pairs == dcr(p, 1), [&] { return w + ": crossing statistic"; });
      run.expect(psi_inverse(t) == p, [&] { return w + ": round trip gives " + to_word_string(psi_inverse(t)); });
      image.insert(t.to_string());
    }
    std::set<std::string> valid;
    for (const auto& t : psi_trees(n)) valid.insert(t.to_string());
    run.expect(image == valid, [&] { return "image differs from constrained trees at n=" + std::to_string(n); });
    run.expect(BigInt(image.size()) == d2(n),
               [&] { return detail::mismatch("image size vs d2", n, BigInt(image.size()), d2(n)); });
  }
}

inline void e3_recurrence(CheckRun& run) {
  for (int n = 0; n <= run.bound(); ++n) {
    run.expect(e3(n) == e3_raw(n), [&] { return detail::mismatch("e3 vs e3_raw", n, e3(n), e3_raw(n)); });
  }
  const int brute = std::min(run.bound(), 9);
  for (int n = 0; n <= brute; ++n) {
    const auto t = detail::sweep_into<Tally>(n, run.jobs(), [](Tally& acc, const SetPartition& p) {
      if (dcr(p, 3) == 0) acc.bump(0);
    });
    run.expect(BigInt(t.at(0)) == e3(n), [&] { return detail::mismatch("e3 vs brute", n, e3(n), BigInt(t.at(0))); });
  }
  run.note("brute force to n=" + std::to_string(brute));
}

inline void gf_e3_check(CheckRun& run) {
  const int order = run.bound();
  const auto e = gf_e3(order);
  const auto coeffs = integer_coefficients(e);
  for (int n = 0; n <= order; ++n) {
    run.expect(coeffs[n] == e3(n), [&] { return detail::mismatch("gf_e3 vs e3", n, coeffs[n], e3(n)); });
  }
  const auto d = gf_e3_difference(order);
  run.expect(e3_difference_residual(d).is_zero(), [&] { return "D residual: " + e3_difference_residual(d).to_string(); });
  const auto wide = gf_e3(order + 1);
  const auto via_e = (wide - TruncatedSeries::constant(1, order + 1)).shifted_down(1) - wide.truncated(order);
  run.expect(via_e == d, [&] { return "D != (E-1)/x - E"; });
}

inline void motzkin_check(CheckRun& run) {
  const int order = run.bound();
  const auto a = gf_motzkin_weighted(order);
  run.expect(a == gf_e3(order), [&] { return "A = " + a.to_string(); });
  const auto scheme = WeightScheme::three_distant();
  const int walked = std::min(order, 14);
  for (int n = 0; n <= order; ++n) {
    const BigInt w = weighted_sum(n, scheme);
    run.expect(w == e3(n), [&] { return detail::mismatch("weighted paths vs e3", n, w, e3(n)); });
    if (n <= walked) {
      const BigInt walk = weighted_sum_by_enumeration(n, scheme);
      run.expect(walk == w, [&] { return detail::mismatch("path walk vs DP", n, walk, w); });
    }
  }
  run.note("paths walked one by one to n=" + std::to_string(walked));
}

struct InvolutionTally : Tally {
  std::array<JointHistogram, 3> hist;

  void merge(const InvolutionTally& other) {
    Tally::merge(other);
    for (int i = 0; i < 3; ++i) hist[i].merge(other.hist[i]);
  }
};

inline void front_involution_check(CheckRun& run) {
  for (int n = 0; n <= run.bound(); ++n) {
    const auto t = detail::sweep_into<InvolutionTally>(n, run.jobs(), [](InvolutionTally& acc, const SetPartition& p) {
      for (int k = 2; k <= 4; ++k) {
        const auto q = front_involution(p, k);
        const std::string tag = " (k=" + std::to_string(k) + ")";
        if (front_involution(q, k) != p) acc.flag(p, "not an involution" + tag);
        if (fcr(q, k) != fne(p, k) || fne(q, k) != fcr(p, k)) acc.flag(p, "fcr/fne not swapped" + tag);
        if (!detail::block_sizes_by_head_equal(p, q)) acc.flag(p, "heads or block sizes changed" + tag);
        acc.hist[k - 2].add(fcr(p, k), fne(p, k));
      }
    });
    run.expect(!t.witness, [&] { return detail::flagged(t); });
    for (int k = 2; k <= 4; ++k) {
      run.expect(t.hist[k - 2].is_symmetric(), [&] {
        return "(fcr,fne) histogram not symmetric at n=" + std::to_string(n) + " k=" + std::to_string(k);
      });
    }
  }
}

inline void occurrence_distribution(CheckRun& run) {
  const auto p = SetPartition::from_word({1, 2, 2, 2, 1});
  const auto c = count_occurrences(p, PatternWord::parse("1221"));
  run.expect(c == 3, [&] { return "f_1221(12221) = " + std::to_string(c); });
  std::vector<std::uint64_t> crossing, nesting;
  for (const auto& s : enumerate(5)) {
    const auto x = count_occurrences(s, PatternWord::parse("1212"));
    run.expect(x != 3, [&] { return to_word_string(s) + " has f_1212 = 3"; });
    crossing.push_back(x);
    nesting.push_back(count_occurrences(s, PatternWord::parse("1221")));
  }
  std::sort(crossing.begin(), crossing.end());
  std::sort(nesting.begin(), nesting.end());
  run.expect(crossing != nesting, [&] { return "1212 and 1221 occurrence counts equidistributed on Π_5"; });
}

inline void filling_symmetry_check(CheckRun& run) {
  for (int n = 1; n <= run.bound(); ++n) {
    const auto r = front_chain_symmetry(n);
    run.expect(r.statistics_agree, [&] { return "filling chains disagree with edge statistics on " + r.witness; });
    run.expect(r.fcr_wfne == r.fne_wfcr, [&] { return "(FCR,WFNE) != (FNE,WFCR) at n=" + std::to_string(n) + " cell " + r.witness; });
  }
}

inline void chain_avoidance_counts(CheckRun& run) {
  for (int n = 0; n <= run.bound(); ++n) {
    const auto t = detail::sweep_into<Tally>(n, run.jobs(), [](Tally& acc, const SetPartition& p) {
      const int fc = chain_max(p, ChainKind::FCR), fn = chain_max(p, ChainKind::FNE);
      const int wc = chain_max(p, ChainKind::WFCR), wn = chain_max(p, ChainKind::WFNE);
      for (int r = 2; r <= 4; ++r) {
        const std::size_t base = 6 * (r - 2);
        if (fc < r) acc.bump(base);
        if (fn < r) acc.bump(base + 1);
        if (wc < r) acc.bump(base + 2);
        if (wn < r) acc.bump(base + 3);
      }
      for (int r = 2; r <= 3; ++r) {
        std::vector<int> up, down;
        for (int i = 1; i <= r; ++i) up.push_back(i);
        down = up;
        for (int i = 1; i <= r; ++i) up.push_back(i);
        for (int i = r; i >= 1; --i) down.push_back(i);
        const bool avoid_up = avoids(p, PatternWord(up));
        const bool avoid_down = avoids(p, PatternWord(down));
        if (avoid_up != (fc < r)) acc.flag(p, "12..r12..r avoidance differs from FCR<r for r=" + std::to_string(r));
        if (avoid_down != (fn < r)) acc.flag(p, "12..rr..21 avoidance differs from FNE<r for r=" + std::to_string(r));
      }
    });
    run.expect(!t.witness, [&] { return detail::flagged(t); });
    for (int r = 2; r <= 4; ++r) {
      const std::size_t base = 6 * (r - 2);
      run.expect(t.at(base) == t.at(base + 1), [&] {
        return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": #FCR<r " + std::to_string(t.at(base)) +
               " vs #FNE<r " + std::to_string(t.at(base + 1));
      });
      run.expect(t.at(base + 2) == t.at(base + 3), [&] {
        return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": #WFCR<r " + std::to_string(t.at(base + 2)) +
               " vs #WFNE<r " + std::to_string(t.at(base + 3));
      });
    }
  }
}

inline void diagram_chain_symmetry(CheckRun& run) {
  int shapes = 0;
  for (int cells = 1; cells <= run.bound(); ++cells) {
    for (const auto& shape : ferrers_diagrams(cells)) {
      ++shapes;
      const auto r = check_chain_symmetry(shape);
      run.expect(r.holds, [&] { return r.witness; });
    }
  }
  run.note(std::to_string(shapes) + " diagrams with at most " + std::to_string(run.bound()) + " cells");
}

struct HistogramTally : Tally {
  JointHistogram hist;

  void merge(const HistogramTally& other) {
    Tally::merge(other);
    hist.merge(other.hist);
  }
};

inline HistogramTally chain_histogram(int n, int jobs, ChainKind x, ChainKind y) {
  return detail::sweep_into<HistogramTally>(n, jobs, [&](HistogramTally& acc, const SetPartition& p) {
    acc.hist.add(chain_max(p, x), chain_max(p, y));
  });
}

inline void front_chain_symmetry_check(CheckRun& run) {
  for (int n = 0; n <= run.bound(); ++n) {
    const auto t = chain_histogram(n, run.jobs(), ChainKind::FCR, ChainKind::FNE);
    run.expect(t.hist.is_symmetric(), [&] {
      const auto cell = t.hist.first_difference(t.hist.transposed());
      return "(FCR,FNE) not symmetric at n=" + std::to_string(n) + " cell (" + std::to_string(cell->first) + "," +
             std::to_string(cell->second) + ")";
    });
  }
  run.note("checked n<=" + std::to_string(run.bound()));
}

inline void weak_chain_asymmetry(CheckRun& run) {
  const int n = run.bound();
  const auto t = chain_histogram(n, run.jobs(), ChainKind::WFCR, ChainKind::WFNE);
  const auto a = t.hist.at(4, 2);
  const auto b = t.hist.at(2, 4);
  run.note("n=" + std::to_string(n) + ": #{WFCR=4, WFNE=2} = " + std::to_string(a) + ", #{WFCR=2, WFNE=4} = " +
           std::to_string(b));
  run.note("(WFCR,WFNE) histogram: " + detail::histogram_string(t.hist));
  if (n == 8) {
    run.expect(a == 73 && b == 74, [&] {
      return "expected 73 and 74, got " + std::to_string(a) + " and " + std::to_string(b);
    });
  } else {
    run.expect(!t.hist.is_symmetric(), [&] { return "(WFCR,WFNE) histogram symmetric at n=" + std::to_string(n); });
  }
}

}  // namespace checks

/// A registered check: CLI token, description, bound semantics and defaults.
struct CheckSpec {
  std::string_view token;
  std::string_view title;
  std::string_view bound_name;
  BoundKind kind;
  int default_bound;
  int min_bound;
  void (*run)(CheckRun&);
};

inline const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry{
      {"thm1.1", "f_k recurrence counts 12...k12-avoiding partitions (k=2..5)", "n", BoundKind::Brute, 9, 0,
       checks::avoidance_recurrence},
      {"thm1.2", "f_2 alternative recurrence equals the Catalan numbers", "n", BoundKind::Series, 20, 0,
       checks::catalan_recurrence},
      {"eq1", "closed generating function of f_k matches the recurrence (k=2..5)", "order", BoundKind::Series, 25, 0,
       checks::gf_fk_check},
      {"eq3", "f_3 alternative recurrence matches f_3", "n", BoundKind::Series, 20, 0, checks::f3_recurrence},
      {"eq5", "generating function of 2-distant noncrossing partitions", "order", BoundKind::Series, 25, 0,
       checks::gf_d2_check},
      {"lemma2.1", "head-prefix descent for h_k matches brute force (k=2..5)", "n", BoundKind::Brute, 9, 1,
       checks::heads_descent_brute},
      {"lemma2.2", "Stirling unrolling of a(i,j)=a(i-1,j)-(i-1)a(i-1,j-1) on random rows", "m", BoundKind::Series, 6, 1,
       checks::unrolling_property},
      {"lemma2.3", "weighted lattice paths sum to s(m,r)", "m", BoundKind::Series, 8, 1, checks::lattice_paths_check},
      {"cor2.4", "h_k descent equals the Stirling closed sum (k<=5)", "n", BoundKind::Series, 12, 1,
       checks::heads_closed_sum},
      {"cor2.5", "p(m,n) Stirling sum matches brute force (m<=4)", "n", BoundKind::Brute, 9, 0,
       checks::heads_prefix_brute},
      {"prop2.6", "exp(mx+e^x-1) coefficients give p(m,m+n) (m<=5)", "order", BoundKind::Series, 15, 0,
       checks::heads_egf},
      {"thm2.7", "phi: noncrossing partitions <-> constrained unary-binary trees", "n", BoundKind::Brute, 9, 1,
       checks::phi_bijection},
      {"thm3.1", "d_2 recurrence matches brute force and the series", "n", BoundKind::Brute, 9, 0,
       checks::d2_recurrence},
      {"thm3.3", "psi: 2-distant noncrossing partitions <-> constrained binary trees", "n", BoundKind::Brute, 9, 1,
       checks::psi_bijection},
      {"thm3.4", "e_n recurrence in both forms, and brute force to n<=9", "n", BoundKind::Series, 25, 0,
       checks::e3_recurrence},
      {"thm3.5", "generating function of 3-distant noncrossing partitions and its D quadratic", "order",
       BoundKind::Series, 25, 1, checks::gf_e3_check},
      {"cor3.6", "weighted Motzkin paths count 3-distant noncrossing partitions", "order", BoundKind::Series, 25, 0,
       checks::motzkin_check},
      {"thm4.1", "front involution swaps fcr_k and fne_k (k=2,3,4)", "n", BoundKind::Brute, 9, 0,
       checks::front_involution_check},
      {"remark4.2", "1212 and 1221 occurrence counts are not equidistributed", "n", BoundKind::Brute, 5, 5,
       checks::occurrence_distribution},
      {"thm4.3", "(FCR,WFNE) and (FNE,WFCR) are equidistributed", "n", BoundKind::Brute, 9, 1,
       checks::filling_symmetry_check},
      {"cor4.4", "no front r-crossing vs no front r-nesting counts (r=2..4)", "n", BoundKind::Brute, 9, 0,
       checks::chain_avoidance_counts},
      {"eq10", "filling symmetry N(nE=s,Se=t) = N(Ne=t,sE=s) on all small diagrams", "cells", BoundKind::Cells, 9, 1,
       checks::diagram_chain_symmetry},
      {"conj4.9", "(FCR,FNE) joint distribution is symmetric", "n", BoundKind::Brute, 11, 0,
       checks::front_chain_symmetry_check},
      {"wfcr-counterexample", "(WFCR,WFNE) joint distribution is not symmetric", "n", BoundKind::Brute, 8, 8,
       checks::weak_chain_asymmetry},
  };
  return registry;
}

inline const CheckSpec* find_check(std::string_view token) {
  for (const auto& spec : check_registry()) {
    if (spec.token == token) return &spec;
  }
  return nullptr;
}

/// Runs a check at the given bound (its default when absent).
inline VerificationReport run_check(const CheckSpec& spec, std::optional<int> bound = std::nullopt, int jobs = 1) {
  const int b = bound.value_or(spec.default_bound);
  const int cap = bound_cap(spec.kind);
  if (b > cap) {
    throw CapExceeded(std::string(spec.token) + ": " + std::string(spec.bound_name) + "=" + std::to_string(b) +
                          " exceeds the cap of " + std::to_string(cap),
                      cap);
  }
  if (b < spec.min_bound) {
    throw DomainError(std::string(spec.token) + ": " + std::string(spec.bound_name) + " must be at least " +
                      std::to_string(spec.min_bound));
  }
  CheckRun run(b, jobs);
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(run);
  } catch (const std::exception& e) {
    run.expect(false, [&] { return std::string("exception: ") + e.what(); });
  }
  const auto stop = std::chrono::steady_clock::now();

  VerificationReport report;
  report.check = spec.token;
  report.title = spec.title;
  report.parameters = {{std::string(spec.bound_name), std::to_string(b)}, {"jobs", std::to_string(jobs)}};
  report.passed = run.passed();
  report.witness = run.witness();
  report.seconds = std::chrono::duration<double>(stop - start).count();
  report.details = run.details();
  return report;
}

}  // namespace partlab
