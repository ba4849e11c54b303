#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace grich {

/// Letter id in 0..k-1. Glyphs are presentation only.
using Letter = unsigned char;

/// A finite word stored as letter ids (one char per letter, not glyphs).
using Word = std::string;
using WordView = std::string_view;

inline Letter letter_at(WordView w, std::size_t i) {
  return static_cast<Letter>(w[i]);
}

inline char as_char(Letter a) { return static_cast<char>(a); }

/// Ordered list of distinct printable glyphs; glyph i denotes letter id i.
class Alphabet {
 public:
  explicit Alphabet(std::string glyphs);

  /// Glyphs '0', '1', ... for k <= 10, continuing with 'a', 'b', ... beyond.
  static Alphabet digits(std::size_t k);

  std::size_t size() const { return glyphs_.size(); }
  const std::string& glyphs() const { return glyphs_; }
  char glyph(Letter a) const;

  std::optional<Letter> find(char glyph) const;
  Letter letter(char glyph) const;

  Word parse(std::string_view glyphs) const;
  std::string render(WordView w) const;

  bool operator==(const Alphabet& other) const { return glyphs_ == other.glyphs_; }

 private:
  std::string glyphs_;
  std::array<std::int16_t, 256> lookup_{};
};

/// Letter-to-word map between two alphabets, extended to words as a morphism.
class Substitution {
 public:
  Substitution(std::vector<Word> images, std::size_t target_size);

  std::size_t source_size() const { return images_.size(); }
  std::size_t target_size() const { return target_size_; }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const { return images_; }

  Word apply(WordView w) const;

 private:
  std::vector<Word> images_;
  std::size_t target_size_;
};

/// Generator of prefixes of an infinite (or, for literals, finite) word.
class WordSource {
 public:
  struct FixedPoint {
    Substitution rules;
    Letter seed;
  };
  struct DigitSum {
    unsigned base;
    unsigned modulus;
  };
  struct Periodic {
    Word period;
    std::size_t alphabet_size;
  };
  struct Literal {
    Word word;
    std::size_t alphabet_size;
  };
  /// rules applied to the word produced by inner.
  struct Image {
    Substitution rules;
    std::shared_ptr<const WordSource> inner;
  };

  /// Fixed point of a prolongable, non-erasing morphism starting with seed.
  static WordSource fixed_point(Substitution rules, Letter seed);
  /// (s_b(n) mod m)_{n >= 0}, s_b the base-b digit sum.
  static WordSource digit_sum(unsigned base, unsigned modulus);
  static WordSource periodic(Word period, std::size_t alphabet_size);
  static WordSource literal(Word word, std::size_t alphabet_size);
  static WordSource morphic_image(Substitution rules, WordSource inner);

  std::size_t alphabet_size() const;

  /// Finite length for literals; nullopt for infinite sources.
  std::optional<std::size_t> length() const;

  /// First `length` letters. Literals throw InsufficientPrefixError past their end.
  Word prefix(std::size_t length) const;

  std::string describe() const;

  const auto& kind() const { return kind_; }

 private:
  using Kind = std::variant<FixedPoint, DigitSum, Periodic, Literal, Image>;
  explicit WordSource(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

inline Word prefix(const WordSource& source, std::size_t length) {
  return source.prefix(length);
}

/// s_b(n): sum of the base-b digits of n.
unsigned digit_sum(std::uint64_t n, unsigned base);

/// Whether every letter id < alphabet_size occurs in w.
bool contains_all_letters(WordView w, std::size_t alphabet_size);

}  // namespace grich
