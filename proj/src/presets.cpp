#include "grich/presets.hpp"

namespace grich::presets {

namespace {

Word ids(std::initializer_list<int> letters) {
  Word w;
  for (int a : letters) w.push_back(as_char(static_cast<Letter>(a)));
  return w;
}

Substitution rules(std::initializer_list<std::initializer_list<int>> images, std::size_t target) {
  std::vector<Word> out;
  for (auto image : images) out.push_back(ids(image));
  return Substitution(std::move(out), target);
}

SymmetryMap anti(std::initializer_list<int> table) {
  std::vector<Letter> perm;
  for (int a : table) perm.push_back(static_cast<Letter>(a));
  return SymmetryMap(std::move(perm), true);
}

}  // namespace

WordSource fibonacci() { return WordSource::fixed_point(rules({{0, 1}, {0}}, 2), 0); }
WordSource thue_morse() { return WordSource::digit_sum(2, 2); }
WordSource t33() { return WordSource::digit_sum(3, 3); }

Substitution phi() {
  return rules({{0, 1}, {2}, {6, 5}, {4}, {2, 3}, {6}, {4, 7}, {0}}, 8);
}

Substitution mu() {
  return rules({{1, 5}, {0, 4}, {1, 2}, {0, 3}, {0, 4}, {1, 2}, {0, 3}, {1, 5}}, 6);
}

Substitution eta() {
  return rules({{0, 4, 1}, {1, 2, 0}, {0, 3, 1}, {1, 5, 0}, {1, 5, 0}, {0, 4, 1}, {1, 2, 0}, {0, 3, 1}}, 6);
}

Letter pi(Letter a) {
  switch (a) {
    case 0: return 2;
    case 4: return 0;
    case 2: return 4;
    default: return a;
  }
}

WordSource word_u() { return WordSource::fixed_point(phi(), 0); }
WordSource word_v() { return WordSource::morphic_image(mu(), word_u()); }

SymmetryGroup id_r(std::size_t alphabet_size) {
  return SymmetryGroup::close({SymmetryMap::reversal(alphabet_size)});
}

SymmetryGroup i2(std::size_t m) { return dihedral_group(m); }

std::vector<SymmetryMap> thetas() {
  return {anti({2, 1, 0, 3, 6, 5, 4, 7}), anti({4, 5, 6, 7, 0, 1, 2, 3}), anti({0, 3, 2, 1, 4, 7, 6, 5})};
}

std::vector<SymmetryMap> psis() {
  return {anti({0, 1, 4, 5, 2, 3}), anti({1, 0, 2, 3, 4, 5}), anti({0, 1, 3, 2, 5, 4})};
}

SymmetryGroup group_g() { return SymmetryGroup::close(thetas()); }
SymmetryGroup group_h() { return SymmetryGroup::close(psis()); }

SymmetryGroup group_h_sub(std::size_t i) {
  auto p = psis();
  return SymmetryGroup::close({p[i % 3], p[(i + 1) % 3]});
}

SymmetryGroup cyclic_antimorphism_group() {
  return SymmetryGroup::close({anti({1, 2, 3, 0})});
}

}  // namespace grich::presets
