#include <gtest/gtest.h>

#include <random>
#include <set>

#include "grich/error.hpp"
#include "grich/lang_index.hpp"
#include "grich/presets.hpp"
#include "oracles.hpp"

using namespace grich;

namespace {

const Alphabet kBin("01");

std::set<std::string> rendered(const LanguageIndex& index, std::size_t n, const Alphabet& a) {
  std::set<std::string> out;
  for (const auto& f : index.factors(n)) out.insert(a.render(f.word));
  return out;
}

}  // namespace

TEST(LanguageIndex, FibonacciFactors) {
  LanguageIndex index(presets::fibonacci().prefix(500), 10);
  EXPECT_EQ(rendered(index, 3, kBin), (std::set<std::string>{"101", "010", "100", "001"}));
  EXPECT_EQ(rendered(index, 4, kBin), (std::set<std::string>{"1001", "1010", "0100", "0010", "0101"}));
  EXPECT_EQ(index.count(0), 1u);
}

TEST(LanguageIndex, T33HasFifteenFactorsOfLengthThree) {
  LanguageIndex index(presets::t33().prefix(2000), 5);
  EXPECT_EQ(index.count(3), 15u);
}

TEST(LanguageIndex, FibonacciComplexityIsSturmian) {
  LanguageIndex index(presets::fibonacci().prefix(2000), 50);
  auto t = complexity(index, presets::id_r(2));
  for (std::size_t n = 0; n <= 52; ++n) EXPECT_EQ(t.c[n], n + 1);
  for (std::size_t n = 1; n <= 50; ++n) EXPECT_EQ(t.dc[n], 1);
  EXPECT_EQ(t.p[0][1], 2u);
  for (std::size_t n = 1; n <= 50; ++n) EXPECT_EQ(t.p[0][n], n % 2 ? 2u : 1u) << n;
}

TEST(LanguageIndex, FirstDifferencesOfExampleWords) {
  LanguageIndex u(presets::word_u().prefix(2000), 4);
  EXPECT_EQ(complexity(u, presets::group_g()).dc[1], 4);
  LanguageIndex v(presets::word_v().prefix(2000), 4);
  auto t = complexity(v, presets::group_h());
  EXPECT_EQ(t.dc[1], 2);
  EXPECT_EQ(t.dc[2], 4);
}

TEST(LanguageIndex, BilateralOrderAndPext) {
  LanguageIndex index(presets::fibonacci().prefix(2000), 10);
  Word w = kBin.parse("010");
  EXPECT_EQ(index.bilateral_order(w), 0);
  const auto& ext = index.at(w).ext;
  EXPECT_EQ(ext.both.size(), 3u);
  auto r = SymmetryMap::reversal(2);
  EXPECT_EQ(index.pext(r, w), std::vector<Letter>{0});
  EXPECT_EQ(index.pext(r, Word{}), std::vector<Letter>{0});
  EXPECT_THROW(index.pext(r, kBin.parse("01")), DomainError);
  EXPECT_THROW(index.at(kBin.parse("11")), DomainError);
}

TEST(LanguageIndex, OccurrencesAreSortedAndConsistent) {
  Word text = presets::thue_morse().prefix(300);
  LanguageIndex index(text, 8);
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& f : index.factors(n)) {
      EXPECT_TRUE(std::is_sorted(f.occurrences.begin(), f.occurrences.end()));
      for (auto p : f.occurrences) EXPECT_EQ(text.substr(p, n), f.word);
      EXPECT_EQ(f.occurrences, find_occurrences(text, f.word));
    }
  EXPECT_EQ(find_occurrences(Word{0, 1}, Word{}), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(LanguageIndex, MatchesOracleOnRandomText) {
  std::mt19937 rng(3);
  for (int it = 0; it < 60; ++it) {
    std::size_t k = 2 + rng() % 3;
    Word text = oracle::random_word(k, 60, rng) + Word(6, '\0');
    LanguageIndex index(text, 4);
    for (std::size_t n = 0; n <= 6; ++n) {
      auto want = oracle::factors(text, n);
      ASSERT_EQ(index.count(n), want.size());
      EXPECT_EQ(factor_set(text, n), std::vector<Word>(want.begin(), want.end()));
    }
    for (std::size_t n = 0; n <= 4; ++n) {
      auto l1 = oracle::factors(text, n + 1), l2 = oracle::factors(text, n + 2);
      for (const auto& f : index.factors(n)) {
        EXPECT_EQ(index.bilateral_order(f.word), oracle::bilateral(l1, l2, f.word, k));
        for (const auto& [a, b] : f.ext.both) {
          EXPECT_NE(std::find(f.ext.left.begin(), f.ext.left.end(), a), f.ext.left.end());
          EXPECT_NE(std::find(f.ext.right.begin(), f.ext.right.end(), b), f.ext.right.end());
        }
      }
    }
  }
}

TEST(LanguageIndex, GroupClosure) {
  Word text = kBin.parse("0010");
  LanguageIndex plain(text, 2);
  EXPECT_FALSE(plain.closed_by_group());
  EXPECT_TRUE(plain.closure_witness(dihedral_group(2), 2).has_value());
  LanguageIndex closed(text, 2, dihedral_group(2));
  EXPECT_TRUE(closed.closed_by_group());
  EXPECT_TRUE(closed.closure_added());
  EXPECT_TRUE(closed.contains(kBin.parse("1101")));
  EXPECT_TRUE(closed.find(kBin.parse("11"))->occurrences.empty());
  EXPECT_FALSE(closed.closure_witness(dihedral_group(2), 4).has_value());
}

TEST(LanguageIndex, PalindromicComplexityBoundedByComplexity) {
  LanguageIndex index(presets::word_v().prefix(2000), 12);
  auto g = presets::group_h();
  auto t = complexity(index, g);
  for (std::size_t i = 0; i < t.thetas.size(); ++i)
    for (std::size_t n = 0; n <= 14; ++n) EXPECT_LE(t.p[i][n], t.c[n]);
  for (std::size_t n = 0; n + 1 < t.c.size(); ++n) EXPECT_EQ(t.dc[n], long(t.c[n + 1]) - long(t.c[n]));
  for (std::size_t n = 0; n + 1 < t.dc.size(); ++n) EXPECT_EQ(t.d2c[n], t.dc[n + 1] - t.dc[n]);
}

TEST(LanguageIndex, PalindromicComplexityOfWordV) {
  LanguageIndex index(presets::word_v().prefix(2000), 5);
  auto psi = presets::psis();
  for (std::size_t i = 0; i < 3; ++i) {
    auto p = index.palindromic_complexity(psi[i]);
    EXPECT_EQ(p[3], 4u);
    EXPECT_EQ(p[2], 0u);
    EXPECT_EQ(p[1], i == 1 ? 4u : 2u);
  }
}

TEST(LanguageIndex, ComplexityCsv) {
  LanguageIndex index(presets::fibonacci().prefix(200), 2);
  auto csv = complexity(index, presets::id_r(2)).to_csv(kBin);
  EXPECT_EQ(csv, "n,C,dC,d2C,P(a:01)\n0,1,1,0,1\n1,2,1,0,2\n2,3,1,0,1\n");
}

TEST(LanguageIndex, StabilityCheck) {
  EXPECT_EQ(first_unstable_length(presets::thue_morse(), 2000, 30), std::nullopt);
  auto lit = WordSource::periodic(Word{0, 1}, 2);
  EXPECT_EQ(first_unstable_length(lit, 100, 10), std::nullopt);
  // Fibonacci prefixes of length 20 miss factors of length 8.
  EXPECT_TRUE(first_unstable_length(presets::fibonacci(), 20, 10).has_value());
}
