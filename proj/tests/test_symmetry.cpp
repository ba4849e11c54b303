#include <gtest/gtest.h>

#include <random>
#include <set>

#include "grich/error.hpp"
#include "grich/presets.hpp"
#include "grich/symmetry.hpp"
#include "oracles.hpp"

using namespace grich;

namespace {

const Alphabet kBin("01");

SymmetryMap E() { return SymmetryMap({1, 0}, true); }
SymmetryMap R() { return SymmetryMap::reversal(2); }

}  // namespace

TEST(SymmetryMap, Application) {
  EXPECT_EQ(kBin.render(R()(kBin.parse("0110"))), "0110");
  EXPECT_EQ(kBin.render(E()(kBin.parse("011"))), "001");
  Alphabet a = Alphabet::digits(8);
  EXPECT_EQ(a.render(presets::thetas()[1](a.parse("0123"))), "7654");
}

TEST(SymmetryMap, RejectsNonBijection) {
  EXPECT_THROW(SymmetryMap({0, 0}, false), DomainError);
  EXPECT_THROW(SymmetryMap({0, 2}, true), DomainError);
}

TEST(SymmetryMap, Composition) {
  EXPECT_EQ(compose(R(), R()), SymmetryMap::identity(2));
  auto er = compose(E(), R());
  EXPECT_FALSE(er.antimorphic());
  EXPECT_EQ(er.perm(), (std::vector<Letter>{1, 0}));
  auto t = presets::thetas();
  auto t01 = compose(t[0], t[1]);
  EXPECT_FALSE(t01.antimorphic());
  EXPECT_NE(t01, SymmetryMap::identity(8));
}

TEST(SymmetryMap, CompositionActsAsFunctionComposition) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    SymmetryMap f(oracle::random_perm(4, rng), rng() % 2), g(oracle::random_perm(4, rng), rng() % 2);
    Word w = oracle::random_word(4, 12, rng);
    EXPECT_EQ(compose(f, g)(w), f(g(w)));
    EXPECT_EQ(compose(f, f.inverse()), SymmetryMap::identity(4));
    EXPECT_EQ(f(w), oracle::act(f, w));
    EXPECT_EQ(f.fixes(w), f(w) == w);
  }
}

TEST(SymmetryMap, Name) {
  EXPECT_EQ(E().name(kBin), "a:10");
  EXPECT_EQ(SymmetryMap::identity(2).name(kBin), "m:01");
}

TEST(SymmetryGroup, CloseReversal) {
  auto g = SymmetryGroup::close({R()});
  ASSERT_EQ(g.order(), 2u);
  EXPECT_EQ(g[0], SymmetryMap::identity(2));
  EXPECT_EQ(g[1], R());
}

TEST(SymmetryGroup, ExampleGroupsHaveOrderEight) {
  auto g = presets::group_g();
  EXPECT_EQ(g.order(), 8u);
  auto h = presets::group_h();
  EXPECT_EQ(h.order(), 8u);
  EXPECT_TRUE(h.is_abelian());
  for (std::size_t i = 0; i < h.order(); ++i) EXPECT_EQ(h.product(i, i), 0u);
}

TEST(SymmetryGroup, InvolutiveAntimorphisms) {
  auto g3 = dihedral_group(2);
  EXPECT_EQ(g3.involutive_antimorphisms(), (std::vector<SymmetryMap>{R(), E()}));
  EXPECT_EQ(presets::id_r(2).involutive_antimorphisms(), std::vector<SymmetryMap>{R()});
  auto i23 = dihedral_group(3).involutive_antimorphisms();
  std::set<SymmetryMap> got(i23.begin(), i23.end());
  std::set<SymmetryMap> want;
  for (Letter k = 0; k < 3; ++k)
    want.insert(SymmetryMap({Letter(k % 3), Letter((k + 2) % 3), Letter((k + 1) % 3)}, true));
  EXPECT_EQ(got, want);
}

TEST(SymmetryGroup, EquivalenceClass) {
  auto g = dihedral_group(2);
  EXPECT_EQ(g.equivalence_class(kBin.parse("011")),
            (std::vector<Word>{kBin.parse("001"), kBin.parse("011"), kBin.parse("100"), kBin.parse("110")}));
  EXPECT_EQ(g.equivalence_class(Word{}), std::vector<Word>{Word{}});
  auto g3 = dihedral_group(3);
  EXPECT_EQ(g3.equivalence_class(Word{0}), (std::vector<Word>{Word{0}, Word{1}, Word{2}}));
  EXPECT_EQ(g.canonical(kBin.parse("110")), kBin.parse("001"));
}

TEST(SymmetryGroup, InvolutiveGeneration) {
  EXPECT_TRUE(dihedral_group(2).is_involutively_generated());
  EXPECT_TRUE(presets::group_h().is_involutively_generated());
  EXPECT_TRUE(presets::group_g().is_involutively_generated());
  auto c4 = presets::cyclic_antimorphism_group();
  EXPECT_EQ(c4.order(), 4u);
  EXPECT_TRUE(c4.involutive_antimorphisms().empty());
  EXPECT_FALSE(c4.is_involutively_generated());
}

TEST(SymmetryGroup, Distinguishing) {
  auto g = presets::group_g();
  std::vector<Word> letters;
  for (Letter a = 0; a < 8; ++a) letters.push_back(Word(1, as_char(a)));
  EXPECT_TRUE(g.is_distinguishing(letters));
  auto h2 = presets::group_h_sub(2);
  EXPECT_FALSE(h2.is_distinguishing(std::vector<Word>{Word{0}}));
}

TEST(SymmetryGroup, Dihedral) {
  auto d2 = dihedral_group(2);
  EXPECT_EQ(d2.order(), 4u);
  EXPECT_TRUE(d2.contains(E()));
  EXPECT_TRUE(d2.contains(R()));
  auto d3 = dihedral_group(3);
  EXPECT_EQ(d3.order(), 6u);
  EXPECT_FALSE(d3.is_abelian());
  auto d1 = dihedral_group(1);
  EXPECT_EQ(d1.order(), 2u);
  EXPECT_TRUE(d1.contains(SymmetryMap::reversal(1)));
}

TEST(SymmetryGroup, RequireAntimorphism) {
  auto g = SymmetryGroup::close({SymmetryMap({1, 0}, false)});
  EXPECT_FALSE(g.has_antimorphism());
  EXPECT_THROW(g.require_antimorphism(), DomainError);
  EXPECT_THROW(SymmetryGroup::close({R(), SymmetryMap::reversal(3)}), DomainError);
}

TEST(SymmetryGroup, Subgroups) {
  auto subs = presets::group_h().subgroups();
  // Z2^3 has 1 + 7 + 7 + 1 subgroups.
  EXPECT_EQ(subs.size(), 16u);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_NE(std::find(subs.begin(), subs.end(), presets::group_h_sub(i)), subs.end());
}

TEST(SymmetryGroup, ClosureMatchesOracle) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::size_t k = 1 + rng() % 5;
    auto gens = oracle::random_generators(k, 240, rng);
    auto g = SymmetryGroup::close(gens);
    auto want = oracle::closure(gens);
    ASSERT_EQ(g.order(), want.size());
    for (const auto& m : g.elements()) EXPECT_TRUE(want.count({m.antimorphic(), m.perm()}));
    EXPECT_EQ(g.morphisms().size(), g.antimorphisms().size());
    EXPECT_EQ(g[0], SymmetryMap::identity(k));
    for (std::size_t a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.product(a, g.inverse(a)), 0u);
      for (std::size_t b = 0; b < g.order(); ++b) EXPECT_EQ(g[g.product(a, b)], compose(g[a], g[b]));
    }
  }
}
