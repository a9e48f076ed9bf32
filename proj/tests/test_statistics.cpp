#include "oracles.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/statistics.hpp"

#include <gtest/gtest.h>

using namespace partlab;

TEST(Statistics, PairCountsMatchDefinitions) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : enumerate(n)) {
      ASSERT_EQ(cr(p), oracle::crossings(p)) << to_word_string(p);
      ASSERT_EQ(ne(p), oracle::nestings(p)) << to_word_string(p);
      for (int k = 1; k <= 3; ++k) ASSERT_EQ(dcr(p, k), oracle::distant_crossings(p, k)) << to_word_string(p);
      for (int k = 2; k <= 4; ++k) {
        ASSERT_EQ(fcr(p, k), oracle::front_crossings(p, k)) << to_word_string(p);
        ASSERT_EQ(fne(p, k), oracle::front_nestings(p, k)) << to_word_string(p);
      }
    }
  }
}

TEST(Statistics, OneDistantCrossingsAreCrossings) {
  for (const auto& p : enumerate(8)) ASSERT_EQ(dcr(p, 1), cr(p));
}

TEST(Statistics, RunningExample) {
  const auto p = SetPartition::from_word({1, 2, 3, 1, 2, 1, 4, 4, 4});
  EXPECT_EQ(fcr(p, 2), 1);
  EXPECT_EQ(fcr(p, 3), 1);
  EXPECT_EQ(fcr(p, 4), 0);
  EXPECT_EQ(cr(p), 2);
}

TEST(Statistics, ParameterValidation) {
  const auto p = SetPartition::from_word({1, 2, 1, 2});
  EXPECT_THROW(fcr(p, 1), DomainError);
  EXPECT_THROW(dcr(p, 0), DomainError);
}

TEST(ChainStatistics, MatchSubsetSearch) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : enumerate(n)) {
      const auto s = oracle::standard_arcs(p);
      const auto f = oracle::front_arcs(p);
      ASSERT_EQ(chain_max(p, ChainKind::CR), oracle::largest_chain(s, false, false)) << to_word_string(p);
      ASSERT_EQ(chain_max(p, ChainKind::NE), oracle::largest_chain(s, true, false)) << to_word_string(p);
      ASSERT_EQ(chain_max(p, ChainKind::FCR), oracle::largest_chain(f, false, false)) << to_word_string(p);
      ASSERT_EQ(chain_max(p, ChainKind::FNE), oracle::largest_chain(f, true, false)) << to_word_string(p);
      ASSERT_EQ(chain_max(p, ChainKind::WFCR), oracle::largest_chain(f, false, true)) << to_word_string(p);
      ASSERT_EQ(chain_max(p, ChainKind::WFNE), oracle::largest_chain(f, true, true)) << to_word_string(p);
    }
  }
}

TEST(ChainStatistics, EdgelessIsZero) {
  EXPECT_EQ(chain_max(SetPartition::from_word({1, 2, 3}), ChainKind::WFNE), 0);
  EXPECT_EQ(chain_max(SetPartition::from_word({1, 1}), ChainKind::FCR), 1);
}

TEST(Statistic, ParseTokens) {
  EXPECT_EQ(Statistic::parse("fcr:3").name(), "fcr:3");
  EXPECT_EQ(Statistic::parse("WFNE").name(), "WFNE");
  EXPECT_THROW(Statistic::parse("fcr"), ParseError);
  EXPECT_THROW(Statistic::parse("cr:2"), ParseError);
  EXPECT_THROW(Statistic::parse("xyz"), ParseError);
  EXPECT_EQ(Statistic::parse("dne:2")(SetPartition::from_word({1, 2, 2, 1})), 0);
}

TEST(JointHistogram, SymmetryAndMerge) {
  JointHistogram a;
  a.add(1, 2);
  a.add(2, 1);
  EXPECT_TRUE(a.is_symmetric());
  JointHistogram b;
  b.add(1, 2, 3);
  a.merge(b);
  EXPECT_EQ(a.at(1, 2), 4u);
  EXPECT_FALSE(a.is_symmetric());
  EXPECT_EQ(a.first_difference(a.transposed()), std::make_pair(1, 2));
}

TEST(JointHistogram, CrossingsAndNestingsSymmetric) {
  JointHistogram h;
  for (const auto& p : enumerate(8)) h.add(cr(p), ne(p));
  EXPECT_TRUE(h.is_symmetric());
}
