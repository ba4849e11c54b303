#pragma once

#include <cstddef>
#include <vector>

#include "grich/symmetry.hpp"
#include "grich/words.hpp"

namespace grich {

struct PalindromeWitness {
  Word word;
  /// Antimorphisms of the group fixing `word`; empty iff it is not a G-palindrome.
  std::vector<SymmetryMap> fixers;

  bool is_palindrome() const { return !fixers.empty(); }
};

PalindromeWitness g_palindrome(const SymmetryGroup& group, WordView w);

/// Sorted start positions of every member of [w] in text.
std::vector<std::size_t> g_occurrences(const SymmetryGroup& group, WordView w, WordView text);
bool g_unioccurrent(const SymmetryGroup& group, WordView w, WordView text);

/// Factors of text running from one G-occurrence of w to the next one, inclusive.
std::vector<Word> complete_g_return_words(const SymmetryGroup& group, WordView w, WordView text);

/// Longest suffix of v fixed by some antimorphism of the group (possibly empty).
Word g_lps(const SymmetryGroup& group, WordView v);

/// Number of letter classes occurring in w that no antimorphism of the group fixes.
std::size_t gamma_g(const SymmetryGroup& group, WordView w);

/// Lengths of the theta-palindromic suffixes of a growing word, longest first.
class PalindromicSuffixes {
 public:
  explicit PalindromicSuffixes(SymmetryMap theta) : theta_(std::move(theta)) {}

  /// `text` must be the previous text extended by one letter.
  void extend(WordView text);
  const std::vector<std::size_t>& lengths() const { return lengths_; }
  std::size_t longest() const { return lengths_.front(); }

 private:
  SymmetryMap theta_;
  std::vector<std::size_t> lengths_{0};
};

struct DefectProfile {
  // Indexed by prefix length 0..|w|.
  std::vector<std::size_t> defect;
  std::vector<std::size_t> pal_classes;
  std::vector<std::size_t> gamma;
  std::vector<std::size_t> lps_length;
  /// 1-based positions of G-lacunas.
  std::vector<std::size_t> lacunas;

  std::size_t final_defect() const { return defect.back(); }
  /// No increase over the second half of the word.
  bool stabilized() const { return defect.back() == defect[(defect.size() - 1) / 2]; }
};

/// Defect of every prefix, computed from the class count and from lacunas.
/// Throws InvariantError if the two computations disagree.
DefectProfile g_defect(const SymmetryGroup& group, WordView w);

/// Number of distinct theta-palindromic factors of each prefix of w, empty word included.
std::vector<std::size_t> theta_palindrome_counts(const SymmetryMap& theta, WordView w);

struct ClassicalRichness {
  std::size_t pal_count;
  bool is_rich;
};
ClassicalRichness classical_richness(WordView w, std::size_t alphabet_size);

struct ThetaRichness {
  std::size_t pal_count;
  std::size_t gamma;
  bool is_rich;
};
/// Throws DomainError unless theta is an involutive antimorphism.
ThetaRichness theta_richness(const SymmetryMap& theta, WordView w);

}  // namespace grich
