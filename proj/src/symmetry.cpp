#include "grich/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "grich/error.hpp"

namespace grich {

SymmetryMap::SymmetryMap(std::vector<Letter> perm, bool antimorphic)
    : antimorphic_(antimorphic), perm_(std::move(perm)) {
  if (perm_.empty()) throw DomainError("symmetry map over an empty alphabet");
  std::vector<bool> hit(perm_.size(), false);
  for (Letter image : perm_) {
    if (image >= perm_.size() || hit[image]) throw DomainError("symmetry map is not a bijection of the alphabet");
    hit[image] = true;
  }
}

SymmetryMap SymmetryMap::identity(std::size_t alphabet_size) {
  std::vector<Letter> perm(alphabet_size);
  for (std::size_t a = 0; a < alphabet_size; ++a) perm[a] = static_cast<Letter>(a);
  return SymmetryMap(std::move(perm), false);
}

SymmetryMap SymmetryMap::reversal(std::size_t alphabet_size) {
  auto r = identity(alphabet_size);
  r.antimorphic_ = true;
  return r;
}

Word SymmetryMap::operator()(WordView w) const {
  Word out(w.size(), '\0');
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    Letter a = letter_at(w, i);
    if (a >= perm_.size()) throw DomainError("word uses a letter outside the symmetry's alphabet");
    out[antimorphic_ ? n - 1 - i : i] = as_char(perm_[a]);
  }
  return out;
}

bool SymmetryMap::fixes(WordView w) const {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    Letter image = perm_[letter_at(w, i)];
    if (as_char(image) != w[antimorphic_ ? n - 1 - i : i]) return false;
  }
  return true;
}

bool SymmetryMap::involutive() const {
  for (std::size_t a = 0; a < perm_.size(); ++a) {
    if (perm_[perm_[a]] != a) return false;
  }
  return true;
}

SymmetryMap SymmetryMap::inverse() const {
  std::vector<Letter> inv(perm_.size());
  for (std::size_t a = 0; a < perm_.size(); ++a) inv[perm_[a]] = static_cast<Letter>(a);
  return SymmetryMap(std::move(inv), antimorphic_);
}

std::string SymmetryMap::name(const Alphabet& alphabet) const {
  std::string out = antimorphic_ ? "a:" : "m:";
  for (Letter image : perm_) out.push_back(alphabet.glyph(image));
  return out;
}

Word apply_symmetry(const SymmetryMap& m, WordView w) { return m(w); }

SymmetryMap compose(const SymmetryMap& f, const SymmetryMap& g) {
  if (f.alphabet_size() != g.alphabet_size()) throw DomainError("composing symmetries over different alphabets");
  std::vector<Letter> perm(g.alphabet_size());
  for (std::size_t a = 0; a < perm.size(); ++a) perm[a] = f(g(static_cast<Letter>(a)));
  return SymmetryMap(std::move(perm), f.antimorphic() != g.antimorphic());
}

SymmetryGroup SymmetryGroup::close(std::span<const SymmetryMap> generators) {
  if (generators.empty()) throw DomainError("closing an empty generator set");
  const std::size_t k = generators.front().alphabet_size();
  for (const auto& g : generators) {
    if (g.alphabet_size() != k) throw DomainError("generators act on alphabets of different sizes");
  }

  std::set<SymmetryMap> found{SymmetryMap::identity(k)};
  std::deque<SymmetryMap> frontier{SymmetryMap::identity(k)};
  while (!frontier.empty()) {
    SymmetryMap x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      SymmetryMap y = compose(g, x);
      if (found.insert(y).second) frontier.push_back(std::move(y));
    }
  }

  SymmetryGroup group;
  group.elements_.assign(found.begin(), found.end());
  std::map<SymmetryMap, std::size_t> index;
  for (std::size_t i = 0; i < group.elements_.size(); ++i) index.emplace(group.elements_[i], i);

  const std::size_t n = group.elements_.size();
  group.table_.resize(n * n);
  group.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ij = index.at(compose(group.elements_[i], group.elements_[j]));
      group.table_[i * n + j] = ij;
      if (ij == 0) group.inverse_[i] = j;
    }
  }
  return group;
}

std::optional<std::size_t> SymmetryGroup::find(const SymmetryMap& m) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), m);
  if (it == elements_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<SymmetryMap> SymmetryGroup::morphisms() const {
  std::vector<SymmetryMap> out;
  for (const auto& e : elements_) {
    if (!e.antimorphic()) out.push_back(e);
  }
  return out;
}

std::vector<SymmetryMap> SymmetryGroup::antimorphisms() const {
  std::vector<SymmetryMap> out;
  for (const auto& e : elements_) {
    if (e.antimorphic()) out.push_back(e);
  }
  return out;
}

std::vector<SymmetryMap> SymmetryGroup::involutive_antimorphisms() const {
  std::vector<SymmetryMap> out;
  for (const auto& e : elements_) {
    if (e.antimorphic() && e.involutive()) out.push_back(e);
  }
  return out;
}

bool SymmetryGroup::has_antimorphism() const { return elements_.back().antimorphic(); }

void SymmetryGroup::require_antimorphism() const {
  if (!has_antimorphism()) {
    throw DomainError("the group contains no antimorphism; richness analyses need at least one");
  }
}

bool SymmetryGroup::is_abelian() const {
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j = i + 1; j < order(); ++j) {
      if (product(i, j) != product(j, i)) return false;
    }
  }
  return true;
}

bool SymmetryGroup::is_involutively_generated() const {
  auto involutions = involutive_antimorphisms();
  if (involutions.empty()) return false;
  return close(involutions).order() == order();
}

std::vector<Word> SymmetryGroup::equivalence_class(WordView w) const {
  std::vector<Word> members;
  members.reserve(order());
  for (const auto& e : elements_) members.push_back(e(w));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

Word SymmetryGroup::canonical(WordView w) const {
  Word best(w);
  for (const auto& e : elements_) {
    Word image = e(w);
    if (image < best) best = std::move(image);
  }
  return best;
}

std::vector<SymmetryMap> SymmetryGroup::fixers(WordView w) const {
  std::vector<SymmetryMap> out;
  for (const auto& e : elements_) {
    if (e.antimorphic() && e.fixes(w)) out.push_back(e);
  }
  return out;
}

bool SymmetryGroup::is_palindrome(WordView w) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](const SymmetryMap& e) { return e.antimorphic() && e.fixes(w); });
}

bool SymmetryGroup::is_distinguishing(std::span<const Word> factors) const {
  auto antis = antimorphisms();
  std::vector<Word> images;
  for (const auto& w : factors) {
    images.clear();
    for (const auto& theta : antis) images.push_back(theta(w));
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  }
  return true;
}

std::vector<SymmetryGroup> SymmetryGroup::subgroups() const {
  // Every subgroup is reached from {Id} by repeatedly adjoining one element.
  using Members = std::vector<std::size_t>;
  auto join = [&](const Members& base, std::size_t g) {
    std::vector<bool> in(order(), false);
    for (auto x : base) in[x] = true;
    std::deque<std::size_t> frontier;
    if (!in[g]) {
      in[g] = true;
      frontier.push_back(g);
    }
    Members members(base);
    if (frontier.size() == 1) members.push_back(g);
    while (!frontier.empty()) {
      std::size_t x = frontier.front();
      frontier.pop_front();
      for (std::size_t y = 0; y < order(); ++y) {
        if (!in[y]) continue;
        for (std::size_t z : {product(x, y), product(y, x)}) {
          if (!in[z]) {
            in[z] = true;
            members.push_back(z);
            frontier.push_back(z);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };

  std::set<Members> seen{Members{0}};
  std::deque<Members> queue{Members{0}};
  while (!queue.empty()) {
    Members current = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < order(); ++g) {
      if (std::binary_search(current.begin(), current.end(), g)) continue;
      Members next = join(current, g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  std::vector<Members> ordered(seen.begin(), seen.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Members& a, const Members& b) { return a.size() < b.size(); });
  std::vector<SymmetryGroup> out;
  for (const auto& members : ordered) {
    std::vector<SymmetryMap> maps;
    for (auto i : members) maps.push_back(elements_[i]);
    out.push_back(close(maps));
  }
  return out;
}

std::string SymmetryGroup::describe(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < order(); ++i) os << (i ? ", " : "") << elements_[i].name(alphabet);
  os << "}";
  return os.str();
}

SymmetryGroup dihedral_group(std::size_t m) {
  if (m == 0) throw DomainError("dihedral group needs m >= 1");
  std::vector<SymmetryMap> elements;
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<Letter> shift(m), flip(m);
    for (std::size_t l = 0; l < m; ++l) {
      shift[l] = static_cast<Letter>((l + c) % m);
      flip[l] = static_cast<Letter>((c + m - l) % m);
    }
    elements.emplace_back(std::move(shift), false);
    elements.emplace_back(std::move(flip), true);
  }
  return SymmetryGroup::close(elements);
}

}  // namespace grich
