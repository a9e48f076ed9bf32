#include "oracles.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/fillings.hpp"
#include "partlab/statistics.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace partlab;

namespace {

// Longest chain by trying every subset of 1-cells. extremes_only selects the rule for
// the enclosing rectangles: true checks only the first/last pair, false
// checks every consecutive pair.
int brute_chain(const Filling& f, FillingChain kind, bool extremes_only) {
  const auto name = to_string(kind);
  const bool north = name[0] == 'n' || name[0] == 'N';
  const bool strict_row = name[0] == 'n' || name[0] == 's';
  const bool strict_col = name[1] == 'e';
  const auto& ones = f.ones();
  const int m = static_cast<int>(ones.size());
  auto follows = [&](const Cell& a, const Cell& b) {
    const int dc = b.col - a.col;
    const int dr = north ? b.row - a.row : a.row - b.row;
    return (strict_col ? dc > 0 : dc >= 0) && (strict_row ? dr > 0 : dr >= 0) && !(dc == 0 && dr == 0);
  };
  auto fits = [&](const Cell& a, const Cell& b) {
    return f.shape().contains(std::max(a.col, b.col), std::max(a.row, b.row));
  };
  int best = 0;
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    std::vector<Cell> chain;
    for (int t = 0; t < m; ++t)
      if (mask >> t & 1U) chain.push_back(ones[t]);
    if (static_cast<int>(chain.size()) <= best) continue;
    std::sort(chain.begin(), chain.end(), [&](const Cell& a, const Cell& b) {
      if (a.col != b.col) return a.col < b.col;
      return north ? a.row < b.row : a.row > b.row;
    });
    bool ok = true;
    for (std::size_t t = 0; t + 1 < chain.size() && ok; ++t) {
      ok = follows(chain[t], chain[t + 1]) && (extremes_only || fits(chain[t], chain[t + 1]));
    }
    if (ok && extremes_only) ok = fits(chain.front(), chain.back());
    if (ok) best = static_cast<int>(chain.size());
  }
  return best;
}

const std::vector<FillingChain> kAllChains{FillingChain::ne, FillingChain::se, FillingChain::nE, FillingChain::Ne,
                                           FillingChain::sE, FillingChain::Se, FillingChain::NE, FillingChain::SE};

}  // namespace

TEST(FerrersDiagram, ShapeBasics) {
  const auto s = FerrersDiagram::staircase(4);
  EXPECT_EQ(s.rows(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(s.cell_count(), 6);
  EXPECT_TRUE(s.contains(2, 2));
  EXPECT_FALSE(s.contains(3, 2));
  EXPECT_THROW(FerrersDiagram({1, 2}), DomainError);
  EXPECT_EQ(ferrers_diagrams(4).size(), 5u);
  EXPECT_EQ(ferrers_diagrams(9).size(), 30u);
}

TEST(Filling, ParseRoundTrip) {
  const auto f = Filling::parse("shape: 3,2,1 ones: (1,2) (2,1)");
  EXPECT_EQ(f.to_string(), "shape: 3,2,1 ones: (1,2) (2,1)");
  EXPECT_EQ(f.column_counts(), (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(f.row_counts(), (std::vector<int>{1, 1, 0}));
  EXPECT_THROW(Filling::parse("shape: 3,2,1 ones: (3,2)"), DomainError);
  EXPECT_THROW(Filling::parse("shape 3 ones:"), ParseError);
}

TEST(Filling, PartitionRoundTrip) {
  EXPECT_EQ(partition_to_filling(SetPartition::from_word({1, 2, 1, 2})).to_string(),
            "shape: 3,2,1 ones: (1,2) (2,1)");
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : enumerate(n)) {
      const auto f = partition_to_filling(p);
      ASSERT_TRUE(is_admissible(f));
      ASSERT_EQ(filling_to_partition(f), p);
    }
}

TEST(Filling, AdmissibleFillingsAreExactlyTheImage) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> image;
    for (const auto& p : enumerate(n)) image.insert(partition_to_filling(p).to_string());
    std::size_t admissible = 0;
    for_each_filling(FerrersDiagram::staircase(n), [&](const Filling& f) {
      const bool in_image = image.count(f.to_string()) > 0;
      EXPECT_EQ(is_admissible(f), in_image) << f.to_string();
      if (!in_image) EXPECT_THROW(filling_to_partition(f), DomainError);
      admissible += is_admissible(f) ? 1 : 0;
    });
    EXPECT_EQ(admissible, image.size());
  }
}

TEST(FillingChains, DynamicProgramMatchesSubsetSearch) {
  for (int cells = 1; cells <= 7; ++cells)
    for (const auto& shape : ferrers_diagrams(cells))
      for_each_filling(shape, [&](const Filling& f) {
        for (auto kind : kAllChains) ASSERT_EQ(chain_max(f, kind), brute_chain(f, kind, true)) << f.to_string();
      });
}

TEST(FillingChains, ConsecutiveRectanglesAreWeakerThanExtremeRectangle) {
  // Consecutive rectangles fitting does not make the outer one fit: some
  // filling has a longer chain under the consecutive rule.
  bool differs = false;
  for (int cells = 1; cells <= 9 && !differs; ++cells)
    for (const auto& shape : ferrers_diagrams(cells)) {
      if (shape.cell_count() > 9) continue;
      for_each_filling(shape, [&](const Filling& f) {
        if (f.ones().size() > 4 || differs) return;
        for (auto kind : kAllChains) {
          const int outer = brute_chain(f, kind, true);
          const int local = brute_chain(f, kind, false);
          EXPECT_LE(outer, local);
          differs = differs || outer != local;
        }
      });
    }
  EXPECT_TRUE(differs);
}

TEST(FillingChains, StaircaseChainsAreFrontChains) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : enumerate(n)) {
      const auto f = partition_to_filling(p);
      ASSERT_EQ(chain_max(f, FillingChain::se), chain_max(p, ChainKind::FCR)) << to_word_string(p);
      ASSERT_EQ(chain_max(f, FillingChain::ne), chain_max(p, ChainKind::FNE)) << to_word_string(p);
      ASSERT_EQ(chain_max(f, FillingChain::sE), chain_max(p, ChainKind::WFCR)) << to_word_string(p);
      ASSERT_EQ(chain_max(f, FillingChain::nE), chain_max(p, ChainKind::WFNE)) << to_word_string(p);
    }
}

TEST(FillingChains, RowLettersCollapseWhenRowsHoldOneCell) {
  std::mt19937 rng(11);
  const auto shape = FerrersDiagram::staircase(7);
  std::bernoulli_distribution coin(0.35);
  bool column_letters_differ = false;
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Cell> ones;
    std::vector<bool> used(shape.row_count() + 1, false);
    for (const auto& [c, r] : shape.cells()) {
      if (!used[r] && coin(rng)) {
        ones.push_back({c, r});
        used[r] = true;
      }
    }
    const Filling f(shape, ones);
    ASSERT_EQ(chain_max(f, FillingChain::ne), chain_max(f, FillingChain::Ne)) << f.to_string();
    ASSERT_EQ(chain_max(f, FillingChain::nE), chain_max(f, FillingChain::NE)) << f.to_string();
    ASSERT_EQ(chain_max(f, FillingChain::se), chain_max(f, FillingChain::Se)) << f.to_string();
    ASSERT_EQ(chain_max(f, FillingChain::sE), chain_max(f, FillingChain::SE)) << f.to_string();
    column_letters_differ = column_letters_differ || chain_max(f, FillingChain::ne) != chain_max(f, FillingChain::nE);
  }
  EXPECT_TRUE(column_letters_differ);
}

TEST(FillingSymmetry, SmallDiagrams) {
  for (int cells = 1; cells <= 7; ++cells)
    for (const auto& shape : ferrers_diagrams(cells)) {
      const auto r = check_chain_symmetry(shape);
      EXPECT_TRUE(r.holds) << r.witness;
    }
}

TEST(FillingSymmetry, CountFillingsAgreesWithHistogram) {
  const FerrersDiagram shape({3, 3, 2});
  const std::vector<int> c{1, 1, 1}, r{1, 1, 1};
  for (int s = 0; s <= 3; ++s)
    for (int t = 0; t <= 3; ++t)
      EXPECT_EQ(count_fillings(shape, c, r, FillingChain::nE, s, FillingChain::Se, t),
                count_fillings(shape, c, r, FillingChain::Ne, t, FillingChain::sE, s));
}

TEST(FillingSymmetry, FrontChainPairsEquidistributed) {
  for (int n = 1; n <= 7; ++n) {
    const auto r = front_chain_symmetry(n);
    EXPECT_TRUE(r.holds()) << r.witness;
  }
}

TEST(Filling, CellCap) {
  EXPECT_THROW(for_each_filling(FerrersDiagram::staircase(7), [](const Filling&) {}), DomainError);
}
