#include "grich/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "grich/error.hpp"

namespace grich {

Alphabet::Alphabet(std::string glyphs) : glyphs_(std::move(glyphs)) {
  if (glyphs_.empty()) throw DomainError("alphabet must contain at least one glyph");
  if (glyphs_.size() > 256) throw DomainError("alphabet larger than 256 letters");
  lookup_.fill(-1);
  for (std::size_t i = 0; i < glyphs_.size(); ++i) {
    auto c = static_cast<unsigned char>(glyphs_[i]);
    if (!std::isgraph(c)) {
      throw DomainError("glyph at index " + std::to_string(i) + " is not printable");
    }
    if (lookup_[c] >= 0) throw DomainError(std::string("duplicate glyph '") + glyphs_[i] + "'");
    lookup_[c] = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::digits(std::size_t k) {
  static constexpr std::string_view kPool =
      "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  if (k == 0 || k > kPool.size()) {
    throw DomainError("digit alphabet size must be in 1.." + std::to_string(kPool.size()));
  }
  return Alphabet(std::string(kPool.substr(0, k)));
}

char Alphabet::glyph(Letter a) const {
  if (a >= glyphs_.size()) throw DomainError("letter id " + std::to_string(a) + " outside alphabet");
  return glyphs_[a];
}

std::optional<Letter> Alphabet::find(char glyph) const {
  auto id = lookup_[static_cast<unsigned char>(glyph)];
  if (id < 0) return std::nullopt;
  return static_cast<Letter>(id);
}

Letter Alphabet::letter(char glyph) const {
  if (auto id = find(glyph)) return *id;
  throw DomainError(std::string("glyph '") + glyph + "' is not in alphabet \"" + glyphs_ + "\"");
}

Word Alphabet::parse(std::string_view glyphs) const {
  Word w;
  w.reserve(glyphs.size());
  for (char c : glyphs) w.push_back(as_char(letter(c)));
  return w;
}

std::string Alphabet::render(WordView w) const {
  std::string out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(glyph(letter_at(w, i)));
  return out;
}

Substitution::Substitution(std::vector<Word> images, std::size_t target_size)
    : images_(std::move(images)), target_size_(target_size) {
  if (images_.empty()) throw DomainError("substitution needs at least one rule");
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t i = 0; i < images_[a].size(); ++i) {
      if (letter_at(images_[a], i) >= target_size_) {
        throw DomainError("image of letter " + std::to_string(a) + " uses a letter outside the target alphabet");
      }
    }
  }
}

Word Substitution::apply(WordView w) const {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out += image(letter_at(w, i));
  return out;
}

namespace {

void require_non_erasing(const Substitution& rules) {
  for (std::size_t a = 0; a < rules.source_size(); ++a) {
    if (rules.image(static_cast<Letter>(a)).empty()) {
      throw DomainError("erasing rule: image of letter " + std::to_string(a) + " is empty");
    }
  }
}

void require_letters(WordView w, std::size_t alphabet_size, const char* what) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (letter_at(w, i) >= alphabet_size) {
      throw DomainError(std::string(what) + " uses a letter outside the alphabet");
    }
  }
}

}  // namespace

WordSource WordSource::fixed_point(Substitution rules, Letter seed) {
  if (rules.source_size() != rules.target_size()) {
    throw DomainError("fixed point needs a morphism from an alphabet to itself");
  }
  if (seed >= rules.source_size()) throw DomainError("seed letter outside the alphabet");
  require_non_erasing(rules);
  const Word& img = rules.image(seed);
  if (img.size() < 2 || letter_at(img, 0) != seed) {
    throw DomainError("morphism is not prolongable on the seed: its image must start with the seed and have length >= 2");
  }
  return WordSource(FixedPoint{std::move(rules), seed});
}

WordSource WordSource::digit_sum(unsigned base, unsigned modulus) {
  if (base < 2) throw DomainError("digit-sum base must be >= 2");
  if (modulus < 1) throw DomainError("digit-sum modulus must be >= 1");
  if (modulus > 256) throw DomainError("digit-sum modulus larger than 256");
  return WordSource(DigitSum{base, modulus});
}

WordSource WordSource::periodic(Word period, std::size_t alphabet_size) {
  if (period.empty()) throw DomainError("period must be nonempty");
  require_letters(period, alphabet_size, "period");
  return WordSource(Periodic{std::move(period), alphabet_size});
}

WordSource WordSource::literal(Word word, std::size_t alphabet_size) {
  require_letters(word, alphabet_size, "literal word");
  return WordSource(Literal{std::move(word), alphabet_size});
}

WordSource WordSource::morphic_image(Substitution rules, WordSource inner) {
  if (rules.source_size() != inner.alphabet_size()) {
    throw DomainError("morphic image rules do not cover the inner word's alphabet");
  }
  require_non_erasing(rules);
  return WordSource(Image{std::move(rules), std::make_shared<const WordSource>(std::move(inner))});
}

std::size_t WordSource::alphabet_size() const {
  struct Visitor {
    std::size_t operator()(const FixedPoint& s) const { return s.rules.source_size(); }
    std::size_t operator()(const DigitSum& s) const { return s.modulus; }
    std::size_t operator()(const Periodic& s) const { return s.alphabet_size; }
    std::size_t operator()(const Literal& s) const { return s.alphabet_size; }
    std::size_t operator()(const Image& s) const { return s.rules.target_size(); }
  };
  return std::visit(Visitor{}, kind_);
}

std::optional<std::size_t> WordSource::length() const {
  if (auto* lit = std::get_if<Literal>(&kind_)) return lit->word.size();
  if (auto* img = std::get_if<Image>(&kind_)) {
    if (auto inner = img->inner->length()) {
      std::size_t total = 0;
      for (char c : img->inner->prefix(*inner)) total += img->rules.image(static_cast<Letter>(c)).size();
      return total;
    }
  }
  return std::nullopt;
}

unsigned digit_sum(std::uint64_t n, unsigned base) {
  unsigned s = 0;
  while (n > 0) {
    s += static_cast<unsigned>(n % base);
    n /= base;
  }
  return s;
}

Word WordSource::prefix(std::size_t length) const {
  struct Visitor {
    std::size_t length;

    Word operator()(const FixedPoint& s) const {
      Word w(1, as_char(s.seed));
      while (w.size() < length) w = s.rules.apply(w);
      w.resize(length);
      return w;
    }
    Word operator()(const DigitSum& s) const {
      Word w(length, '\0');
      for (std::size_t n = 0; n < length; ++n) w[n] = as_char(static_cast<Letter>(grich::digit_sum(n, s.base) % s.modulus));
      return w;
    }
    Word operator()(const Periodic& s) const {
      Word w(length, '\0');
      for (std::size_t n = 0; n < length; ++n) w[n] = s.period[n % s.period.size()];
      return w;
    }
    Word operator()(const Literal& s) const {
      if (length > s.word.size()) {
        throw InsufficientPrefixError("literal word has length " + std::to_string(s.word.size()) +
                                      ", requested prefix of length " + std::to_string(length));
      }
      return s.word.substr(0, length);
    }
    Word operator()(const Image& s) const {
      // Every image is nonempty, so `length` inner letters produce at least `length` letters.
      std::size_t inner_length = length;
      if (auto finite = s.inner->length()) inner_length = std::min(inner_length, *finite);
      Word w = s.rules.apply(s.inner->prefix(inner_length));
      if (w.size() < length) {
        throw InsufficientPrefixError("morphic image of a finite word is shorter than " + std::to_string(length));
      }
      w.resize(length);
      return w;
    }
  };
  return std::visit(Visitor{length}, kind_);
}

std::string WordSource::describe() const {
  struct Visitor {
    std::string operator()(const FixedPoint& s) const {
      std::ostringstream os;
      os << "fixed point of a morphism on " << s.rules.source_size() << " letters, seed " << int(s.seed);
      return os.str();
    }
    std::string operator()(const DigitSum& s) const {
      return "digit-sum word t(" + std::to_string(s.base) + "," + std::to_string(s.modulus) + ")";
    }
    std::string operator()(const Periodic& s) const {
      return "periodic word with period length " + std::to_string(s.period.size());
    }
    std::string operator()(const Literal& s) const {
      return "literal word of length " + std::to_string(s.word.size());
    }
    std::string operator()(const Image& s) const { return "morphic image of " + s.inner->describe(); }
  };
  return std::visit(Visitor{}, kind_);
}

bool contains_all_letters(WordView w, std::size_t alphabet_size) {
  std::vector<bool> seen(alphabet_size, false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size() && count < alphabet_size; ++i) {
    Letter a = letter_at(w, i);
    if (a < alphabet_size && !seen[a]) {
      seen[a] = true;
      ++count;
    }
  }
  return count == alphabet_size;
}

}  // namespace grich
