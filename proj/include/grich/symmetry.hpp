#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grich/words.hpp"

namespace grich {

/// A morphism or antimorphism of the free monoid that permutes letters.
///
/// Acts on a word letterwise by `perm`, then reverses the result when
/// antimorphic (the two steps commute).
class SymmetryMap {
 public:
  SymmetryMap(std::vector<Letter> perm, bool antimorphic);

  static SymmetryMap identity(std::size_t alphabet_size);
  static SymmetryMap reversal(std::size_t alphabet_size);

  std::size_t alphabet_size() const { return perm_.size(); }
  bool antimorphic() const { return antimorphic_; }
  const std::vector<Letter>& perm() const { return perm_; }

  Letter operator()(Letter a) const { return perm_[a]; }
  Word operator()(WordView w) const;

  /// apply(w) == w, without allocating.
  bool fixes(WordView w) const;
  bool involutive() const;
  SymmetryMap inverse() const;

  /// "m:<images>" or "a:<images>", images listed in letter order as glyphs.
  std::string name(const Alphabet& alphabet) const;

  // Morphisms order before antimorphisms; ties broken by permutation table.
  auto operator<=>(const SymmetryMap&) const = default;
  bool operator==(const SymmetryMap&) const = default;

 private:
  bool antimorphic_;
  std::vector<Letter> perm_;
};

Word apply_symmetry(const SymmetryMap& m, WordView w);

/// f after g: apply g first.
SymmetryMap compose(const SymmetryMap& f, const SymmetryMap& g);

/// Finite group of symmetry maps, stored in canonical order with a Cayley table.
/// Element 0 is always the identity.
class SymmetryGroup {
 public:
  /// Smallest group containing the generators. Throws DomainError on mixed alphabets.
  static SymmetryGroup close(std::span<const SymmetryMap> generators);
  static SymmetryGroup close(std::initializer_list<SymmetryMap> generators) {
    return close(std::span<const SymmetryMap>(generators.begin(), generators.size()));
  }

  std::size_t order() const { return elements_.size(); }
  std::size_t alphabet_size() const { return elements_.front().alphabet_size(); }
  const std::vector<SymmetryMap>& elements() const { return elements_; }
  const SymmetryMap& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> find(const SymmetryMap& m) const;
  bool contains(const SymmetryMap& m) const { return find(m).has_value(); }

  /// Index of elements_[i] after elements_[j].
  std::size_t product(std::size_t i, std::size_t j) const { return table_[i * order() + j]; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }

  std::vector<SymmetryMap> morphisms() const;
  std::vector<SymmetryMap> antimorphisms() const;
  /// G^(2): antimorphisms f with f∘f = Id.
  std::vector<SymmetryMap> involutive_antimorphisms() const;

  bool has_antimorphism() const;
  /// Throws DomainError when the group has no antimorphism.
  void require_antimorphism() const;
  bool is_abelian() const;
  bool is_involutively_generated() const;

  /// [w]: distinct images of w under the group, sorted.
  std::vector<Word> equivalence_class(WordView w) const;
  /// Lexicographically least member of [w].
  Word canonical(WordView w) const;

  /// Antimorphisms of the group fixing w.
  std::vector<SymmetryMap> fixers(WordView w) const;
  bool is_palindrome(WordView w) const;

  /// Distinct antimorphisms act distinctly on each of the given words.
  bool is_distinguishing(std::span<const Word> factors) const;

  /// Every subgroup (including the trivial one and the group itself), ordered by
  /// size then by element indices.
  std::vector<SymmetryGroup> subgroups() const;

  std::string describe(const Alphabet& alphabet) const;

  bool operator==(const SymmetryGroup& other) const { return elements_ == other.elements_; }

 private:
  SymmetryGroup() = default;
  std::vector<SymmetryMap> elements_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

/// I_2(m) on {0..m-1}: morphisms l -> l+c and antimorphisms l -> c-l (mod m).
SymmetryGroup dihedral_group(std::size_t m);

}  // namespace grich
