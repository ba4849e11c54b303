#include <gtest/gtest.h>

#include "grich/error.hpp"
#include "grich/presets.hpp"
#include "grich/words.hpp"
#include "oracles.hpp"

using namespace grich;

namespace {

std::string render(const WordSource& s, std::size_t len) {
  return Alphabet::digits(s.alphabet_size()).render(s.prefix(len));
}

}  // namespace

TEST(Alphabet, ParseRenderRoundTrip) {
  Alphabet a("xyz");
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.parse("zyx"), Word({'\2', '\1', '\0'}));
  EXPECT_EQ(a.render(a.parse("xxzy")), "xxzy");
  EXPECT_EQ(a.find('q'), std::nullopt);
  EXPECT_THROW(a.letter('q'), DomainError);
  EXPECT_THROW(a.parse("xq"), DomainError);
}

TEST(Alphabet, RejectsDuplicateGlyphs) {
  EXPECT_THROW(Alphabet("0120"), DomainError);
}

TEST(Alphabet, DigitsContinueWithLetters) {
  EXPECT_EQ(Alphabet::digits(3).glyphs(), "012");
  EXPECT_EQ(Alphabet::digits(12).glyphs(), "0123456789ab");
}

TEST(WordSource, FibonacciPrefix) {
  EXPECT_EQ(render(presets::fibonacci(), 16), "0100101001001010");
  EXPECT_EQ(render(presets::fibonacci(), 10), "0100101001");
  EXPECT_EQ(presets::fibonacci().prefix(3000), oracle::fibonacci(3000));
}

TEST(WordSource, ThueMorsePrefix) {
  EXPECT_EQ(render(presets::thue_morse(), 16), "0110100110010110");
}

TEST(WordSource, T33Prefix) {
  EXPECT_EQ(render(presets::t33(), 9), "012120201");
}

TEST(WordSource, DigitSumMatchesOracle) {
  for (unsigned b = 2; b <= 5; ++b)
    for (unsigned m = 1; m <= 4; ++m)
      EXPECT_EQ(WordSource::digit_sum(b, m).prefix(500), oracle::thue_morse_like(500, b, m)) << b << "," << m;
  for (std::uint64_t n = 0; n < 2000; ++n) EXPECT_EQ(digit_sum(n, 7), oracle::digit_sum(n, 7));
}

TEST(WordSource, DigitSumAgreesWithFixedPoint) {
  // t_{3,3} is also the fixed point of 0 -> 012, 1 -> 120, 2 -> 201.
  Substitution s({Word{0, 1, 2}, Word{1, 2, 0}, Word{2, 0, 1}}, 3);
  EXPECT_EQ(WordSource::fixed_point(s, 0).prefix(3000), presets::t33().prefix(3000));
  Substitution tm({Word{0, 1}, Word{1, 0}}, 2);
  EXPECT_EQ(WordSource::fixed_point(tm, 0).prefix(4096), presets::thue_morse().prefix(4096));
}

TEST(WordSource, RejectsBadParameters) {
  Substitution erasing({Word{0, 1}, Word{}}, 2);
  EXPECT_THROW(WordSource::fixed_point(erasing, 0), DomainError);
  Substitution not_prolongable({Word{1, 0}, Word{0}}, 2);
  EXPECT_THROW(WordSource::fixed_point(not_prolongable, 0), DomainError);
  EXPECT_THROW(WordSource::digit_sum(1, 2), DomainError);
  EXPECT_THROW(WordSource::digit_sum(2, 0), DomainError);
  EXPECT_THROW(WordSource::periodic(Word{}, 2), DomainError);
  EXPECT_THROW(WordSource::literal(Word{0, 3}, 2), DomainError);
}

TEST(WordSource, PeriodicAndLiteral) {
  auto p = WordSource::periodic(Word{0, 1, 1}, 2);
  EXPECT_EQ(render(p, 7), "0110110");
  EXPECT_EQ(p.length(), std::nullopt);
  auto l = WordSource::literal(Word{0, 1, 0}, 2);
  EXPECT_EQ(l.length(), 3u);
  EXPECT_EQ(render(l, 3), "010");
  EXPECT_THROW(l.prefix(4), InsufficientPrefixError);
}

TEST(WordSource, MorphicImage) {
  auto v = presets::word_v();
  EXPECT_EQ(v.alphabet_size(), 6u);
  Word u = presets::word_u().prefix(400);
  Word image = presets::mu().apply(u);
  EXPECT_EQ(v.prefix(image.size()), image);
}

TEST(Substitution, AppliesLetterwise) {
  Substitution s({Word{0, 1}, Word{0}}, 2);
  EXPECT_EQ(s.apply(Word{0, 1, 0}), (Word{0, 1, 0, 0, 1}));
  EXPECT_THROW(Substitution({Word{0, 2}}, 2), DomainError);
}

TEST(Words, ContainsAllLetters) {
  EXPECT_TRUE(contains_all_letters(Word{0, 2, 1}, 3));
  EXPECT_FALSE(contains_all_letters(Word{0, 0, 1}, 3));
}
