#include "partlab/verify.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace partlab;

TEST(Registry, AllTokensPresent) {
  const std::set<std::string> expected{"thm1.1", "thm1.2", "eq1",    "eq3",    "eq5",     "lemma2.1",
                                       "lemma2.2", "lemma2.3", "cor2.4", "cor2.5", "prop2.6", "thm2.7",
                                       "thm3.1", "thm3.3", "thm3.4", "thm3.5", "cor3.6",  "thm4.1",
                                       "remark4.2", "thm4.3", "cor4.4", "eq10",   "conj4.9", "wfcr-counterexample"};
  std::set<std::string> got;
  for (const auto& spec : check_registry()) got.insert(std::string(spec.token));
  EXPECT_EQ(got, expected);
  EXPECT_EQ(find_check("nope"), nullptr);
}

TEST(RunCheck, SmallBoundsPass) {
  for (const auto& spec : check_registry()) {
    if (spec.token == "thm2.7") continue;
    const int bound = std::max(spec.min_bound, std::min(spec.default_bound, 6));
    const auto r = run_check(spec, bound, 2);
    EXPECT_TRUE(r.passed) << r.check << ": " << r.witness.value_or("");
    EXPECT_EQ(r.passed, !r.witness.has_value());
  }
}

TEST(RunCheck, PhiBlockStatisticFailsFromThree) {
  const auto* spec = find_check("thm2.7");
  EXPECT_TRUE(run_check(*spec, 1).passed);
  EXPECT_TRUE(run_check(*spec, 2).passed);
  const auto r = run_check(*spec, 3);
  ASSERT_FALSE(r.passed);
  EXPECT_NE(r.witness->find("1,2,1"), std::string::npos) << *r.witness;
}

TEST(RunCheck, WeakChainCountsAtEight) {
  const auto r = run_check(*find_check("wfcr-counterexample"), 8, 4);
  EXPECT_TRUE(r.passed);
  ASSERT_FALSE(r.details.empty());
  EXPECT_NE(r.details[0].find("= 73"), std::string::npos);
  EXPECT_NE(r.details[0].find("= 74"), std::string::npos);
}

TEST(RunCheck, CapsAndMinimums) {
  EXPECT_THROW(run_check(*find_check("conj4.9"), 13), CapExceeded);
  EXPECT_THROW(run_check(*find_check("eq10"), 17), CapExceeded);
  EXPECT_THROW(run_check(*find_check("wfcr-counterexample"), 7), DomainError);
  setenv("PARTLAB_MAX_N", "5", 1);
  EXPECT_EQ(max_brute_n(), 5);
  EXPECT_THROW(run_check(*find_check("thm1.1"), 6), CapExceeded);
  unsetenv("PARTLAB_MAX_N");
  EXPECT_EQ(max_brute_n(), 12);
}

TEST(RunCheck, ShardedSweepsAgreeWithSequential) {
  const auto a = run_check(*find_check("conj4.9"), 8, 1);
  const auto b = run_check(*find_check("conj4.9"), 8, 8);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.details, b.details);
}
