#include "grich/palin.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "grich/error.hpp"
#include "grich/lang_index.hpp"

namespace grich {

PalindromeWitness g_palindrome(const SymmetryGroup& group, WordView w) {
  return PalindromeWitness{Word(w), group.fixers(w)};
}

std::vector<std::size_t> g_occurrences(const SymmetryGroup& group, WordView w, WordView text) {
  std::vector<std::size_t> out;
  for (const auto& member : group.equivalence_class(w)) {
    auto hits = find_occurrences(text, member);
    out.insert(out.end(), hits.begin(), hits.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool g_unioccurrent(const SymmetryGroup& group, WordView w, WordView text) {
  return g_occurrences(group, w, text).size() == 1;
}

std::vector<Word> complete_g_return_words(const SymmetryGroup& group, WordView w, WordView text) {
  if (w.empty()) throw DomainError("return words of the empty word are not defined");
  auto occ = g_occurrences(group, w, text);
  std::set<Word> found;
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
    found.emplace(text.substr(occ[k], occ[k + 1] + w.size() - occ[k]));
  }
  return {found.begin(), found.end()};
}

Word g_lps(const SymmetryGroup& group, WordView v) {
  for (std::size_t len = v.size(); len > 0; --len) {
    WordView suffix = v.substr(v.size() - len);
    if (group.is_palindrome(suffix)) return Word(suffix);
  }
  return {};
}

namespace {

bool letter_fixed_by_some_antimorphism(const SymmetryGroup& group, Letter a) {
  for (const auto& e : group.elements()) {
    if (e.antimorphic() && e(a) == a) return true;
  }
  return false;
}

}  // namespace

std::size_t gamma_g(const SymmetryGroup& group, WordView w) {
  std::set<Word> classes;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter a = letter_at(w, i);
    if (!letter_fixed_by_some_antimorphism(group, a)) classes.insert(group.canonical(w.substr(i, 1)));
  }
  return classes.size();
}

void PalindromicSuffixes::extend(WordView text) {
  const std::size_t m = text.size();
  const Letter a = letter_at(text, m - 1);
  std::vector<std::size_t> next;
  for (std::size_t len : lengths_) {
    if (len + 2 > m) continue;
    Letter b = letter_at(text, m - len - 2);
    if (theta_(a) == b && theta_(b) == a) next.push_back(len + 2);
  }
  if (theta_(a) == a) next.push_back(1);
  next.push_back(0);
  std::sort(next.begin(), next.end(), std::greater<>());
  lengths_ = std::move(next);
}

DefectProfile g_defect(const SymmetryGroup& group, WordView w) {
  std::vector<PalindromicSuffixes> trackers;
  for (const auto& theta : group.antimorphisms()) trackers.emplace_back(theta);

  DefectProfile profile;
  std::set<Word> pal_classes{Word{}};
  std::set<Word> gamma_classes;
  std::vector<std::size_t> letter_class_hits(group.alphabet_size(), 0);
  std::size_t lacuna_count = 0;

  profile.defect.push_back(0);
  profile.pal_classes.push_back(1);
  profile.gamma.push_back(0);
  profile.lps_length.push_back(0);

  for (std::size_t m = 1; m <= w.size(); ++m) {
    WordView prefix = w.substr(0, m);
    std::size_t lps = 0;
    for (auto& t : trackers) {
      t.extend(prefix);
      lps = std::max(lps, t.longest());
    }
    WordView s = prefix.substr(m - lps);

    const Letter a = letter_at(prefix, m - 1);
    Word letter_rep = group.canonical(prefix.substr(m - 1));
    std::size_t& hits = letter_class_hits[letter_at(letter_rep, 0)];
    ++hits;
    if (!letter_fixed_by_some_antimorphism(group, a)) gamma_classes.insert(letter_rep);
    pal_classes.insert(group.canonical(s));

    // Lacuna: neither the new letter nor s is G-unioccurrent in the prefix.
    bool letter_unique = hits == 1;
    bool lps_unique = false;
    if (!s.empty()) {
      lps_unique = true;
      for (const auto& member : group.equivalence_class(s)) {
        auto pos = prefix.find(member);
        if (pos != WordView::npos && pos < m - lps) {
          lps_unique = false;
          break;
        }
      }
    }
    if (!letter_unique && !lps_unique) {
      ++lacuna_count;
      profile.lacunas.push_back(m);
    }

    std::size_t by_formula = m + 1 - pal_classes.size() - gamma_classes.size();
    if (by_formula != lacuna_count) {
      throw InvariantError("defect by class count (" + std::to_string(by_formula) +
                           ") differs from lacuna count (" + std::to_string(lacuna_count) +
                           ") at prefix length " + std::to_string(m));
    }
    profile.defect.push_back(by_formula);
    profile.pal_classes.push_back(pal_classes.size());
    profile.gamma.push_back(gamma_classes.size());
    profile.lps_length.push_back(lps);
  }
  return profile;
}

std::vector<std::size_t> theta_palindrome_counts(const SymmetryMap& theta, WordView w) {
  if (!theta.antimorphic()) throw DomainError("palindrome counts need an antimorphism");
  PalindromicSuffixes suffixes(theta);
  std::unordered_set<Word> seen{Word{}};
  std::vector<std::size_t> counts{1};
  for (std::size_t m = 1; m <= w.size(); ++m) {
    WordView prefix = w.substr(0, m);
    suffixes.extend(prefix);
    seen.emplace(prefix.substr(m - suffixes.longest()));
    counts.push_back(seen.size());
  }
  return counts;
}

ClassicalRichness classical_richness(WordView w, std::size_t alphabet_size) {
  std::size_t count = theta_palindrome_counts(SymmetryMap::reversal(alphabet_size), w).back();
  return {count, count == w.size() + 1};
}

ThetaRichness theta_richness(const SymmetryMap& theta, WordView w) {
  if (!theta.antimorphic() || !theta.involutive()) {
    throw DomainError("theta-richness needs an involutive antimorphism");
  }
  std::size_t count = theta_palindrome_counts(theta, w).back();
  std::size_t gamma = gamma_g(SymmetryGroup::close({theta}), w);
  return {count, gamma, count == w.size() + 1 - gamma};
}

}  // namespace grich
