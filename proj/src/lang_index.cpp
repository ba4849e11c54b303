#include "grich/lang_index.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "grich/error.hpp"

namespace grich {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

FactorInfo* lookup(std::vector<FactorInfo>& level, WordView w) {
  auto it = std::lower_bound(level.begin(), level.end(), w,
                             [](const FactorInfo& f, WordView key) { return f.word < key; });
  if (it == level.end() || it->word != w) return nullptr;
  return &*it;
}

}  // namespace

LanguageIndex::LanguageIndex(Word text, std::size_t n_max) : text_(std::move(text)), n_max_(n_max) {
  build(nullptr);
}

LanguageIndex::LanguageIndex(Word text, std::size_t n_max, const SymmetryGroup& group)
    : text_(std::move(text)), n_max_(n_max) {
  build(&group);
}

void LanguageIndex::build(const SymmetryGroup* group) {
  if (n_max_ > text_.size()) {
    throw DomainError("n_max " + std::to_string(n_max_) + " exceeds text length " +
                      std::to_string(text_.size()));
  }
  const std::size_t top = n_max_ + 2;
  levels_.assign(top + 1, {});
  const WordView text(text_);

  for (std::size_t n = 0; n <= top; ++n) {
    auto& level = levels_[n];
    if (n > text.size()) continue;
    std::vector<std::pair<WordView, std::size_t>> windows;
    windows.reserve(text.size() - n + 1);
    for (std::size_t i = 0; i + n <= text.size(); ++i) windows.emplace_back(text.substr(i, n), i);
    std::sort(windows.begin(), windows.end());
    for (const auto& [w, i] : windows) {
      if (level.empty() || level.back().word != w) level.push_back(FactorInfo{Word(w), {}, {}});
      level.back().occurrences.push_back(i);
    }
  }

  if (group != nullptr) {
    closed_by_group_ = true;
    for (std::size_t n = 0; n <= top; ++n) {
      auto& level = levels_[n];
      std::vector<Word> missing;
      for (const auto& f : level) {
        for (const auto& g : group->elements()) {
          Word image = g(f.word);
          if (!lookup(level, image)) missing.push_back(std::move(image));
        }
      }
      sort_unique(missing);
      if (missing.empty()) continue;
      closure_added_ = true;
      for (auto& w : missing) level.push_back(FactorInfo{std::move(w), {}, {}});
      std::sort(level.begin(), level.end(),
                [](const FactorInfo& a, const FactorInfo& b) { return a.word < b.word; });
    }
  }

  for (std::size_t n = 0; n + 1 <= top; ++n) {
    auto& level = levels_[n];
    for (const auto& x : levels_[n + 1]) {
      WordView xv(x.word);
      if (auto* f = lookup(level, xv.substr(1))) f->ext.left.push_back(letter_at(xv, 0));
      if (auto* f = lookup(level, xv.substr(0, n))) f->ext.right.push_back(letter_at(xv, n));
    }
    if (n + 2 <= top) {
      for (const auto& x : levels_[n + 2]) {
        WordView xv(x.word);
        if (auto* f = lookup(level, xv.substr(1, n))) {
          f->ext.both.emplace_back(letter_at(xv, 0), letter_at(xv, n + 1));
        }
      }
    }
    for (auto& f : level) {
      sort_unique(f.ext.left);
      sort_unique(f.ext.right);
      sort_unique(f.ext.both);
    }
  }
}

const std::vector<FactorInfo>& LanguageIndex::factors(std::size_t n) const {
  if (n >= levels_.size()) {
    throw DomainError("length " + std::to_string(n) + " is beyond the indexed range (n_max " +
                      std::to_string(n_max_) + ")");
  }
  return levels_[n];
}

const FactorInfo* LanguageIndex::find(WordView w) const {
  if (w.size() >= levels_.size()) return nullptr;
  return lookup(const_cast<std::vector<FactorInfo>&>(levels_[w.size()]), w);
}

const FactorInfo& LanguageIndex::at(WordView w) const {
  if (const auto* f = find(w)) return *f;
  throw DomainError("word of length " + std::to_string(w.size()) + " is not an indexed factor");
}

void LanguageIndex::check_extension_length(WordView w) const {
  if (w.size() > n_max_) {
    throw DomainError("extension data needs |w| <= n_max (" + std::to_string(n_max_) + ")");
  }
}

long LanguageIndex::bilateral_order(WordView w) const {
  check_extension_length(w);
  const auto& e = at(w).ext;
  return static_cast<long>(e.both.size()) - static_cast<long>(e.left.size()) -
         static_cast<long>(e.right.size()) + 1;
}

std::vector<Letter> LanguageIndex::pext(const SymmetryMap& theta, WordView w) const {
  if (!theta.antimorphic()) throw DomainError("pext needs an antimorphism");
  if (!theta.fixes(w)) throw DomainError("pext is defined only for palindromes of the given antimorphism");
  check_extension_length(w);
  std::vector<Letter> out;
  const auto* f = find(w);
  if (!f) return out;
  for (const auto& [a, b] : f->ext.both) {
    if (theta(a) == b && theta(b) == a) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> LanguageIndex::palindromic_complexity(const SymmetryMap& theta) const {
  if (!theta.antimorphic()) throw DomainError("palindromic complexity needs an antimorphism");
  std::vector<std::size_t> out;
  for (const auto& level : levels_) {
    out.push_back(static_cast<std::size_t>(std::count_if(
        level.begin(), level.end(), [&](const FactorInfo& f) { return theta.fixes(f.word); })));
  }
  return out;
}

std::optional<std::pair<Word, Word>> LanguageIndex::closure_witness(const SymmetryGroup& group,
                                                                    std::size_t up_to) const {
  for (std::size_t n = 0; n <= std::min(up_to, levels_.size() - 1); ++n) {
    for (const auto& f : levels_[n]) {
      for (const auto& g : group.elements()) {
        Word image = g(f.word);
        if (!find(image)) return std::make_pair(f.word, std::move(image));
      }
    }
  }
  return std::nullopt;
}

std::string ComplexityTable::to_csv(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << "n,C,dC,d2C";
  for (const auto& t : thetas) os << ",P(" << t.name(alphabet) << ")";
  os << "\n";
  for (std::size_t n = 0; n <= n_max; ++n) {
    os << n << ',' << c[n] << ',' << dc[n] << ',' << d2c[n];
    for (const auto& col : p) os << ',' << col[n];
    os << "\n";
  }
  return os.str();
}

ComplexityTable complexity(const LanguageIndex& index, const std::vector<SymmetryMap>& thetas) {
  ComplexityTable t;
  t.n_max = index.n_max();
  t.thetas = thetas;
  for (std::size_t n = 0; n <= t.n_max + 2; ++n) t.c.push_back(index.count(n));
  for (std::size_t n = 0; n <= t.n_max + 1; ++n) {
    t.dc.push_back(static_cast<long>(t.c[n + 1]) - static_cast<long>(t.c[n]));
  }
  for (std::size_t n = 0; n <= t.n_max; ++n) t.d2c.push_back(t.dc[n + 1] - t.dc[n]);
  for (const auto& theta : thetas) t.p.push_back(index.palindromic_complexity(theta));
  return t;
}

std::vector<Word> factor_set(WordView text, std::size_t n) {
  std::vector<Word> out;
  if (n > text.size()) return out;
  for (std::size_t i = 0; i + n <= text.size(); ++i) out.emplace_back(text.substr(i, n));
  sort_unique(out);
  return out;
}

std::vector<std::size_t> find_occurrences(WordView text, WordView w) {
  std::vector<std::size_t> out;
  if (w.size() > text.size()) return out;
  if (w.empty()) {
    for (std::size_t i = 0; i <= text.size(); ++i) out.push_back(i);
    return out;
  }
  for (auto pos = text.find(w); pos != WordView::npos; pos = text.find(w, pos + 1)) out.push_back(pos);
  return out;
}

Extensions scan_extensions(WordView text, WordView w) {
  Extensions e;
  for (auto i : find_occurrences(text, w)) {
    bool has_left = i > 0;
    bool has_right = i + w.size() < text.size();
    if (has_left) e.left.push_back(letter_at(text, i - 1));
    if (has_right) e.right.push_back(letter_at(text, i + w.size()));
    if (has_left && has_right) e.both.emplace_back(letter_at(text, i - 1), letter_at(text, i + w.size()));
  }
  sort_unique(e.left);
  sort_unique(e.right);
  sort_unique(e.both);
  return e;
}

std::optional<std::size_t> first_unstable_length(const WordSource& source, std::size_t length,
                                                 std::size_t n_max) {
  Word shorter = source.prefix(length);
  Word longer = source.prefix(2 * length);
  for (std::size_t n = 0; n <= n_max + 2; ++n) {
    if (factor_set(shorter, n) != factor_set(longer, n)) return n;
  }
  return std::nullopt;
}

}  // namespace grich
