#include "partlab/generating_functions.hpp"
#include "partlab/paths.hpp"
#include "partlab/recurrences.hpp"

#include <gtest/gtest.h>

using namespace partlab;

TEST(MotzkinPath, ParseAndValidate) {
  const auto p = MotzkinPath::parse("UHD");
  EXPECT_EQ(p.length(), 3);
  EXPECT_EQ(p.to_string(), "UHD");
  EXPECT_THROW(MotzkinPath::parse("DU"), DomainError);
  EXPECT_THROW(MotzkinPath::parse("UU"), DomainError);
  EXPECT_THROW(MotzkinPath::parse("UX"), ParseError);
}

TEST(MotzkinPath, CountsAreMotzkinNumbers) {
  const std::vector<int> motzkin{1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
  for (int n = 0; n < static_cast<int>(motzkin.size()); ++n) {
    EXPECT_EQ(motzkin_paths(n).size(), static_cast<std::size_t>(motzkin[n]));
    EXPECT_EQ(motzkin_number(n), BigInt(motzkin[n]));
  }
}

TEST(MotzkinPath, WeightOfSmallPath) {
  // H at height 0, U, H at height 1, D to height 0.
  EXPECT_EQ(weight(MotzkinPath::parse("HUHD"), WeightScheme::three_distant()), BigInt(1 * 2 * 1));
  EXPECT_EQ(weight(MotzkinPath::parse("UUHDD"), WeightScheme::three_distant()), BigInt(3 * 2 * 1));
}

TEST(MotzkinPath, TransferMatchesEnumeration) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(weighted_sum(n, WeightScheme::three_distant()),
              weighted_sum_by_enumeration(n, WeightScheme::three_distant()));
    EXPECT_EQ(weighted_sum(n, WeightScheme::uniform()), motzkin_number(n));
  }
}

TEST(MotzkinPath, ThreeDistantWeightsCountPartitions) {
  for (int n = 0; n <= 25; ++n) EXPECT_EQ(weighted_sum(n, WeightScheme::three_distant()), e3(n)) << n;
  const auto c = integer_coefficients(gf_motzkin_weighted(25));
  for (int n = 0; n <= 25; ++n) EXPECT_EQ(c[n], e3(n)) << n;
}

TEST(MotzkinPath, UniformFixedPoint) {
  const auto c = integer_coefficients(motzkin_gf(WeightScheme::uniform(), 15));
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(c[n], motzkin_number(n));
}

TEST(LatticePath, EnumerationAndWeights) {
  const auto paths = enumerate_ne_paths(2, 1);
  ASSERT_EQ(paths.size(), 3u);
  EXPECT_EQ(paths[0].steps, "EEN");
  EXPECT_EQ(ne_weight(paths[0]), BigInt(-3));
  EXPECT_EQ(ne_weight(paths[2]), BigInt(-1));
  EXPECT_THROW(enumerate_ne_paths(-1, 2), DomainError);
}
