// One PASS/FAIL line per acceptance criterion. A criterion passes when every
// check it groups passes at the stated bound and the total time is within its
// limit. Exit status is 0 iff all criteria pass.

#include "partlab/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

using namespace partlab;

namespace {

struct Run {
  const char* token;
  int bound;
};

struct Criterion {
  int id;
  const char* title;
  std::vector<Run> runs;
  double limit_seconds;
};

}  // namespace

int main() {
  const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  // (FCR,FNE) sweep at n=11: 10 min single-threaded, 2 min with 8 shards.
  const double sweep_limit = jobs >= 8 ? 120.0 : 600.0;

  const std::vector<Criterion> criteria{
      {1, "f_k recurrence = brute-force 12...k12-avoiders, k=2..5, n<=9", {{"thm1.1", 9}}, 10},
      {2, "f_k generating function = recurrence, k=2..5, order 25", {{"eq1", 25}}, 1},
      {3, "f_2 alternative = Catalan, f_3 alternative = f_3, n<=20", {{"thm1.2", 20}, {"eq3", 20}}, 1},
      {4,
       "h_k descent = Stirling sum (n<=12), lattice weights = s(m,r) (m<=8), unrolling on random rows",
       {{"cor2.4", 12}, {"lemma2.3", 8}, {"lemma2.2", 6}},
       1},
      {5, "p(m,n) = brute force (m<=4, n<=9) = EGF coefficients (m<=5, n<=15)", {{"cor2.5", 9}, {"prop2.6", 15}}, 5},
      {6, "phi round trip, image and block statistic, n<=9", {{"thm2.7", 9}}, 5},
      {7,
       "d_2 recurrence = brute force (n<=9) = series (n<=25); psi round trip and statistics, n<=9",
       {{"thm3.1", 9}, {"eq5", 25}, {"thm3.3", 9}},
       10},
      {8,
       "e_n recurrences = series = weighted Motzkin sums = brute force; D residual zero",
       {{"thm3.4", 25}, {"thm3.5", 25}, {"cor3.6", 25}},
       30},
      {9, "front involution swaps (fcr_k, fne_k), k=2,3,4; symmetric histograms, n<=9", {{"thm4.1", 9}}, 30},
      {10, "1221 occurs 3 times in 12221; no partition of [5] has 3 occurrences of 1212", {{"remark4.2", 5}}, 1},
      {11,
       "(FCR,WFNE) ~ (FNE,WFCR) for n<=9; filling symmetry on diagrams <=9 cells; chain avoidance counts",
       {{"thm4.3", 9}, {"cor4.4", 9}, {"eq10", 9}},
       120},
      {12, "(FCR,FNE) histogram symmetric for n<=11", {{"conj4.9", 11}}, sweep_limit},
      {13, "(WFCR,WFNE) at n=8: entries (4,2)=73 and (2,4)=74", {{"wfcr-counterexample", 8}}, 1},
  };

  bool all = true;
  for (const auto& c : criteria) {
    double seconds = 0;
    std::string failure;
    for (const auto& r : c.runs) {
      const auto* spec = find_check(r.token);
      if (!spec) {
        failure = std::string("unknown check ") + r.token;
        break;
      }
      try {
        const auto report = run_check(*spec, r.bound, jobs);
        seconds += report.seconds;
        if (!report.passed && failure.empty()) failure = std::string(r.token) + ": " + report.witness.value_or("?");
      } catch (const std::exception& e) {
        if (failure.empty()) failure = std::string(r.token) + ": " + e.what();
      }
    }
    if (failure.empty() && seconds > c.limit_seconds) failure = "time limit exceeded";
    const bool ok = failure.empty();
    all = all && ok;
    std::printf("%s %2d  %s  [%.2f s, limit %.0f s]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.limit_seconds, ok ? "" : "  ", failure.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
