#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grich/symmetry.hpp"
#include "grich/words.hpp"

namespace grich {

struct Extensions {
  std::vector<Letter> left;
  std::vector<Letter> right;
  std::vector<std::pair<Letter, Letter>> both;
};

struct FactorInfo {
  Word word;
  /// Start positions in the text. Empty for factors added by group closure.
  std::vector<std::size_t> occurrences;
  Extensions ext;

  bool left_special() const { return ext.left.size() >= 2; }
  bool right_special() const { return ext.right.size() >= 2; }
  bool special() const { return left_special() || right_special(); }
  bool bispecial() const { return left_special() && right_special(); }
};

/// Factors of a finite text up to length n_max, with extension data.
///
/// Lengths n_max+1 and n_max+2 are kept as factor sets so that extensions of
/// every length up to n_max are available; their own extension data is partial.
class LanguageIndex {
 public:
  LanguageIndex(Word text, std::size_t n_max);
  /// Factor sets of every stored length are closed under `group`.
  LanguageIndex(Word text, std::size_t n_max, const SymmetryGroup& group);

  const Word& text() const { return text_; }
  std::size_t n_max() const { return n_max_; }

  bool closed_by_group() const { return closed_by_group_; }
  /// Whether closing under the group added at least one factor.
  bool closure_added() const { return closure_added_; }

  /// Sorted factors of length n, n <= n_max + 2.
  const std::vector<FactorInfo>& factors(std::size_t n) const;
  std::size_t count(std::size_t n) const { return factors(n).size(); }

  const FactorInfo* find(WordView w) const;
  /// Throws DomainError when w is not an indexed factor.
  const FactorInfo& at(WordView w) const;
  bool contains(WordView w) const { return find(w) != nullptr; }

  /// #Bext - #Lext - #Rext + 1, for |w| <= n_max.
  long bilateral_order(WordView w) const;

  /// {a : a w theta(a) in L, theta(theta(a)) = a}. w must be a theta-palindrome.
  std::vector<Letter> pext(const SymmetryMap& theta, WordView w) const;

  /// P_theta(n) for n = 0..n_max+2.
  std::vector<std::size_t> palindromic_complexity(const SymmetryMap& theta) const;

  /// A pair (factor, image) with |factor| <= up_to whose image is missing from the index.
  std::optional<std::pair<Word, Word>> closure_witness(const SymmetryGroup& group,
                                                       std::size_t up_to) const;

 private:
  void build(const SymmetryGroup* group);
  void check_extension_length(WordView w) const;

  Word text_;
  std::size_t n_max_;
  bool closed_by_group_ = false;
  bool closure_added_ = false;
  std::vector<std::vector<FactorInfo>> levels_;
};

struct ComplexityTable {
  std::size_t n_max = 0;
  std::vector<SymmetryMap> thetas;
  std::vector<std::size_t> c;    // n = 0..n_max+2
  std::vector<long> dc;          // n = 0..n_max+1
  std::vector<long> d2c;         // n = 0..n_max
  std::vector<std::vector<std::size_t>> p;  // per theta, n = 0..n_max+2

  /// Rows n = 0..n_max with columns n,C,dC,d2C and one P column per theta.
  std::string to_csv(const Alphabet& alphabet) const;
};

ComplexityTable complexity(const LanguageIndex& index, const std::vector<SymmetryMap>& thetas);
inline ComplexityTable complexity(const LanguageIndex& index, const SymmetryGroup& group) {
  return complexity(index, group.antimorphisms());
}

/// Sorted distinct factors of length n.
std::vector<Word> factor_set(WordView text, std::size_t n);

/// All start positions of w in text; the empty word occurs at 0..|text|.
std::vector<std::size_t> find_occurrences(WordView text, WordView w);

/// Extensions of w read directly from the windows of text around its occurrences.
Extensions scan_extensions(WordView text, WordView w);

/// Smallest n <= n_max + 2 whose factor set differs between the prefixes of
/// length L and 2L, or nullopt when all agree.
std::optional<std::size_t> first_unstable_length(const WordSource& source, std::size_t length,
                                                 std::size_t n_max);

}  // namespace grich
