#include "oracles.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/pattern.hpp"
#include "partlab/statistics.hpp"

#include <gtest/gtest.h>

using namespace partlab;

namespace {

std::vector<int> letters(const PatternWord& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST(PatternWord, PatternOfAWord) {
  EXPECT_EQ(letters(PatternWord({2, 4, 5, 5, 2})), (std::vector<int>{1, 2, 3, 3, 1}));
  EXPECT_EQ(PatternWord::parse("12312").to_string(), "12312");
}

TEST(PatternWord, FrontCrossingPattern) {
  EXPECT_EQ(front_crossing_pattern(2).to_string(), "1212");
  EXPECT_EQ(front_crossing_pattern(4).to_string(), "123412");
  EXPECT_THROW(front_crossing_pattern(1), DomainError);
}

TEST(Avoidance, MatchesSubsequenceSearch) {
  const std::vector<std::vector<int>> taus{{1, 2, 1, 2}, {1, 2, 2, 1}, {1, 2, 3, 1, 2}, {1, 1, 1}, {1, 2, 3}, {1, 2, 1}};
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : enumerate(n)) {
      for (const auto& t : taus) {
        const PatternWord tau(t);
        const int naive = oracle::occurrences(p, t);
        ASSERT_EQ(avoids(p, tau), naive == 0) << to_word_string(p) << " " << tau.to_string();
        ASSERT_EQ(count_occurrences(p, tau), static_cast<std::uint64_t>(naive))
            << to_word_string(p) << " " << tau.to_string();
      }
    }
  }
}

TEST(Avoidance, NoncrossingIff1212Avoiding) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : enumerate(n)) {
      ASSERT_EQ(avoids(p, PatternWord::parse("1212")), oracle::crossings(p) == 0);
    }
  }
}

TEST(Avoidance, FrontNoncrossingIffPatternAvoiding) {
  for (int k = 2; k <= 5; ++k) {
    const auto tau = front_crossing_pattern(k);
    for (int n = 0; n <= 8; ++n) {
      for (const auto& p : enumerate(n)) {
        ASSERT_EQ(avoids(p, tau), oracle::front_crossings(p, k) == 0) << "k=" << k << " " << to_word_string(p);
        ASSERT_EQ(is_k_front_noncrossing(p, k), oracle::front_crossings(p, k) == 0);
      }
    }
  }
}

TEST(Occurrences, NotEquidistributed) {
  EXPECT_EQ(count_occurrences(SetPartition::from_word({1, 2, 2, 2, 1}), PatternWord::parse("1221")), 3u);
  for (const auto& p : enumerate(5)) EXPECT_NE(count_occurrences(p, PatternWord::parse("1212")), 3u);
}
