#include "grich/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "grich/error.hpp"

namespace grich {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Rich: return "rich";
    case Verdict::AlmostRichCandidate: return "almost-rich-candidate";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

VerdictSummary assemble_verdict(const RouteOutcomes& r) {
  VerdictSummary s;
  if (!r.closed) {
    s.verdict = Verdict::Refuted;
    s.notes.push_back("factor sets are not closed under the group");
    return s;
  }
  const std::pair<const char*, bool> routes[] = {{"tls", r.tls},       {"crw", r.crw},
                                                 {"lps", r.lps},       {"defect", r.defect},
                                                 {"identity", r.identity}, {"bispecial", r.bispecial}};
  std::size_t supporting = 0;
  for (const auto& [name, ok] : routes) supporting += ok ? 1 : 0;

  if (supporting == std::size(routes)) {
    s.verdict = r.threshold <= 1 ? Verdict::Rich : Verdict::AlmostRichCandidate;
  } else if (supporting == 0) {
    s.verdict = Verdict::Refuted;
  } else {
    s.verdict = Verdict::Inconsistent;
    s.inconsistency = true;
    std::string note = "characterizations disagree:";
    for (const auto& [name, ok] : routes) note += std::string(" ") + name + (ok ? "=pass" : "=fail");
    s.notes.push_back(note);
  }

  if (s.verdict == Verdict::Rich && r.contains_all_letters && !r.involutively_generated) {
    s.verdict = Verdict::Inconsistent;
    s.inconsistency = true;
    s.notes.push_back("every route supports richness, yet the group is not generated by its involutive "
                      "antimorphisms and the word uses every letter");
  }
  return s;
}

namespace {

// Whether the longest G-palindromic suffix of w (length lps) or its last letter is
// G-unioccurrent in w.
bool lps_condition(const SymmetryGroup& group, const std::vector<Letter>& letter_class, WordView w,
                   std::size_t lps) {
  if (lps > 0) {
    bool unique = true;
    for (const auto& member : group.equivalence_class(w.substr(w.size() - lps))) {
      auto pos = w.find(member);
      if (pos < w.size() - lps) {
        unique = false;
        break;
      }
    }
    if (unique) return true;
  }
  const Letter last = letter_class[letter_at(w, w.size() - 1)];
  std::size_t hits = 0;
  for (std::size_t i = 0; i < w.size() && hits < 2; ++i) hits += letter_class[letter_at(w, i)] == last;
  return hits == 1;
}

CrwResult check_return_words(const SymmetryGroup& group, const LanguageIndex& index, std::size_t n_lo,
                             std::size_t n_hi) {
  CrwResult r;
  const auto antis = group.antimorphisms();
  const WordView text(index.text());
  for (std::size_t n = std::max<std::size_t>(n_lo, 1); n <= n_hi; ++n) {
    std::map<Word, std::vector<std::size_t>> classes;
    for (const auto& f : index.factors(n)) {
      auto& occ = classes[group.canonical(f.word)];
      occ.insert(occ.end(), f.occurrences.begin(), f.occurrences.end());
    }
    std::set<Word> seen;
    for (auto& [rep, occ] : classes) {
      std::sort(occ.begin(), occ.end());
      if (occ.size() < 2) {
        ++r.classes_unchecked;
        continue;
      }
      std::size_t longest = 0;
      for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
        const std::size_t len = occ[k + 1] + n - occ[k];
        longest = std::max(longest, len);
        Word v(text.substr(occ[k], len));
        if (!seen.insert(v).second) continue;
        ++r.return_words;
        if (r.holds && !group.is_palindrome(v)) {
          r.holds = false;
          r.factor = rep;
          r.return_word = v;
        }
        WordView vv(v);
        bool shaped = std::any_of(antis.begin(), antis.end(), [&](const SymmetryMap& theta) {
          return theta.fixes(vv) ? true : vv.substr(len - n - 1) == theta(vv.substr(0, n + 1));
        });
        if (!shaped && r.shape_ok) {
          r.shape_ok = false;
          r.shape_witness = v;
        }
      }
      bool covered = occ.size() >= 3 || text.size() - occ.back() >= longest;
      ++(covered ? r.classes_checked : r.classes_unchecked);
    }
  }
  return r;
}

LpsResult check_lps(const SymmetryGroup& group, const LanguageIndex& index, std::size_t n_lo) {
  LpsResult r;
  std::vector<Letter> letter_class(group.alphabet_size());
  for (std::size_t a = 0; a < letter_class.size(); ++a) {
    letter_class[a] = letter_at(group.canonical(Word(1, as_char(static_cast<Letter>(a)))), 0);
  }
  const std::size_t lo = std::max<std::size_t>(n_lo, 1);

  for (std::size_t n = lo; n <= index.n_max(); ++n) {
    for (const auto& f : index.factors(n)) {
      ++r.factors_checked;
      if (!lps_condition(group, letter_class, f.word, g_lps(group, f.word).size()) && r.holds) {
        r.holds = false;
        r.witness = f.word;
      }
    }
  }

  const WordView text(index.text());
  std::vector<PalindromicSuffixes> trackers;
  for (const auto& theta : group.antimorphisms()) trackers.emplace_back(theta);
  for (std::size_t m = 1; m <= text.size(); ++m) {
    WordView prefix = text.substr(0, m);
    std::size_t lps = 0;
    for (auto& t : trackers) {
      t.extend(prefix);
      lps = std::max(lps, t.longest());
    }
    if (m < lo) continue;
    ++r.positions_checked;
    if (r.holds && !lps_condition(group, letter_class, prefix, lps)) {
      r.holds = false;
      r.witness = Word(prefix);
      r.position = m;
    }
  }
  return r;
}

}  // namespace

RichnessReport verify(const SymmetryGroup& group, const WordSource& source, const VerifyOptions& options) {
  group.require_antimorphism();
  if (group.alphabet_size() != source.alphabet_size()) {
    throw DomainError("group acts on " + std::to_string(group.alphabet_size()) + " letters but the word uses " +
                      std::to_string(source.alphabet_size()));
  }
  RichnessReport rep;
  rep.word_id = options.word_id;
  rep.group_id = options.group_id;
  rep.group_order = group.order();
  rep.n_max = options.n_max;
  rep.threshold = std::max<std::size_t>(options.threshold, 1);
  const std::size_t N = rep.threshold;

  std::size_t length = options.length;
  if (auto finite = source.length()) {
    length = std::min(length, *finite);
    rep.warnings.push_back("finite word: factor-set stability cannot be checked");
  } else {
    for (std::size_t doublings = 0;; ++doublings) {
      auto unstable = first_unstable_length(source, length, options.n_max);
      if (!unstable) break;
      if (doublings == options.max_doublings) {
        throw InsufficientPrefixError("factors of length " + std::to_string(*unstable) +
                                      " still differ between prefixes of length " + std::to_string(length) +
                                      " and " + std::to_string(2 * length));
      }
      rep.warnings.push_back("factors of length " + std::to_string(*unstable) + " unstable at prefix length " +
                             std::to_string(length) + "; doubling");
      length *= 2;
    }
  }
  if (options.n_max + 2 > length) {
    throw InsufficientPrefixError("prefix length " + std::to_string(length) + " is shorter than n_max + 2");
  }
  rep.length = length;
  const Word text = source.prefix(length);
  const LanguageIndex index(text, options.n_max);

  rep.closure_witness = index.closure_witness(group, options.n_max + 2);
  rep.routes.closed = !rep.closure_witness;
  rep.routes.threshold = N;
  rep.routes.contains_all_letters = contains_all_letters(text, source.alphabet_size());
  rep.routes.involutively_generated = group.is_involutively_generated();

  for (std::size_t n = 0; n <= options.n_max; ++n) {
    if (distinguishing_at(group, index, n)) {
      rep.first_distinguishing = n;
      break;
    }
  }

  for (std::size_t n = 1; n <= options.n_max; ++n) {
    try {
      rep.tls.push_back(tls_verdict(group, index, n));
    } catch (const InsufficientPrefixError& e) {
      // Without closure the classes of special factors need not match up.
      if (rep.routes.closed) throw;
      TlsVerdict t;
      t.order = n;
      t.satisfied = t.tree = t.connected = false;
      rep.tls.push_back(t);
      rep.warnings.push_back("graph of symmetries of order " + std::to_string(n) + " undefined: " + e.what());
    }
  }
  for (std::size_t k = rep.tls.size(); k > 0 && rep.tls[k - 1].satisfied; --k) rep.candidate_threshold = k;
  for (const auto& t : rep.tls) {
    if (t.order >= N && !t.satisfied) rep.routes.tls = false;
  }

  if (options.n_max >= 1) {
    rep.identity = complexity_identity(group, index, 1, options.n_max);
    rep.bispecial = bispecial_check(group, index, 1, options.n_max);
  }
  const std::size_t d = std::max(N, rep.first_distinguishing.value_or(options.n_max + 1));
  for (const auto& rec : rep.identity) {
    if (rec.n >= d && !rec.equality) rep.routes.identity = false;
    if (!rec.chain_consistent) {
      rep.summary.notes.push_back("second-difference identity broken at n=" + std::to_string(rec.n));
    }
    if (rec.distinguishing && !rec.inequality && rep.routes.closed) {
      rep.summary.notes.push_back("complexity inequality violated at distinguishing n=" + std::to_string(rec.n));
    }
  }
  for (const auto& b : rep.bispecial) {
    if (b.n >= d && !b.ok) rep.routes.bispecial = false;
  }
  if (d <= options.n_max && !rep.identity[d - 1].equality) rep.routes.bispecial = false;

  rep.crw = check_return_words(group, index, N, options.n_max);
  rep.routes.crw = rep.crw.holds;
  rep.lps = check_lps(group, index, N);
  rep.routes.lps = rep.lps.holds;

  const DefectProfile profile = g_defect(group, text);
  rep.defect.length = text.size();
  rep.defect.final_defect = profile.final_defect();
  rep.defect.stabilized = profile.stabilized();
  rep.defect.identically_zero = profile.final_defect() == 0;
  for (std::size_t k = 0; k < profile.lacunas.size() && k < 10; ++k) rep.defect.first_lacunas.push_back(profile.lacunas[k]);
  rep.routes.defect = N <= 1 ? rep.defect.identically_zero : rep.defect.stabilized;

  auto extra_notes = std::move(rep.summary.notes);
  rep.summary = assemble_verdict(rep.routes);
  if (rep.crw.holds && !rep.crw.shape_ok) {
    extra_notes.push_back("a complete return word does not have the wa ... theta(wa) shape");
  }
  if (!extra_notes.empty()) {
    rep.summary.inconsistency = true;
    rep.summary.verdict = Verdict::Inconsistent;
    rep.summary.notes.insert(rep.summary.notes.end(), extra_notes.begin(), extra_notes.end());
  }
  return rep;
}

std::vector<std::string> RichnessReport::witnesses(const Alphabet& alphabet) const {
  std::vector<std::string> out;
  if (closure_witness) {
    out.push_back("closure: " + alphabet.render(closure_witness->first) + " maps to missing " +
                  alphabet.render(closure_witness->second));
  }
  if (!routes.tls) {
    for (const auto& t : tls) {
      if (t.order < threshold || t.satisfied) continue;
      std::string w = t.witness(alphabet);
      out.push_back("tls n=" + std::to_string(t.order) + ": " + (w.empty() ? "graph of symmetries undefined" : w));
      break;
    }
  }
  if (!routes.crw) {
    out.push_back("crw: [" + alphabet.render(crw.factor) + "] has non-palindromic return word " +
                  alphabet.render(crw.return_word));
  }
  if (!routes.lps) {
    out.push_back(lps.position ? "lps: prefix of length " + std::to_string(*lps.position)
                               : "lps: factor " + alphabet.render(lps.witness));
  }
  if (!routes.defect) {
    out.push_back(defect.first_lacunas.empty() ? "defect: " + std::to_string(defect.final_defect)
                                               : "defect: lacuna at " + std::to_string(defect.first_lacunas.front()));
  }
  const std::size_t d = std::max(threshold, first_distinguishing.value_or(n_max + 1));
  if (!routes.identity || !routes.bispecial) {
    for (const auto& rec : identity) {
      if (rec.n >= d && !rec.equality) {
        out.push_back("identity n=" + std::to_string(rec.n) + ": " + std::to_string(rec.lhs) + " vs " +
                      std::to_string(rec.rhs));
        break;
      }
    }
  }
  if (!routes.bispecial) {
    for (const auto& b : bispecial) {
      auto bad = std::find_if(b.records.begin(), b.records.end(), [](const auto& r) { return !r.ok; });
      if (b.n >= d && bad != b.records.end()) {
        out.push_back("bispecial " + alphabet.render(bad->word) + ": b=" + std::to_string(bad->b));
        break;
      }
    }
  }
  return out;
}

std::string RichnessReport::to_text(const Alphabet& alphabet) const {
  std::ostringstream os;
  auto pf = [](bool ok) { return ok ? "pass" : "fail"; };
  os << "word " << word_id << ", group " << group_id << " (order " << group_order << "), prefix length " << length
     << ", n <= " << n_max << ", threshold N = " << threshold << "\n";
  switch (summary.verdict) {
    case Verdict::Rich:
      os << "verdict: G-rich up to n_max = " << n_max << " (Property G-tls(1) verified only for n <= " << n_max
         << ")\n";
      break;
    case Verdict::AlmostRichCandidate:
      os << "verdict: almost G-rich candidate with threshold N = " << threshold << " (checked for n <= " << n_max
         << ")\n";
      break;
    case Verdict::Refuted: os << "verdict: refuted\n"; break;
    case Verdict::Inconsistent: os << "verdict: INCONSISTENT\n"; break;
  }
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  for (const auto& note : summary.notes) os << "note: " << note << "\n";
  os << "routes: tls=" << pf(routes.tls) << " crw=" << pf(routes.crw) << " lps=" << pf(routes.lps)
     << " defect=" << pf(routes.defect) << " identity=" << pf(routes.identity)
     << " bispecial=" << pf(routes.bispecial) << "\n";
  os << "closed under group: " << (routes.closed ? "yes" : "no");
  if (closure_witness) {
    os << " (" << alphabet.render(closure_witness->first) << " maps to missing "
       << alphabet.render(closure_witness->second) << ")";
  }
  os << "\n";
  os << "involutively generated: " << (routes.involutively_generated ? "yes" : "no") << "\n";
  os << "first distinguishing n: "
     << (first_distinguishing ? std::to_string(*first_distinguishing) : std::string("none")) << "\n";
  os << "candidate threshold: "
     << (candidate_threshold ? std::to_string(*candidate_threshold) : std::string("none")) << "\n";
  for (const auto& t : tls) {
    if (!t.satisfied) os << "tls fails at n=" << t.order << ": " << t.witness(alphabet) << "\n";
  }
  for (const auto& rec : identity) {
    if (rec.n >= threshold && rec.distinguishing && !rec.equality) {
      os << "identity fails at n=" << rec.n << ": " << rec.lhs << " vs " << rec.rhs << "\n";
      break;
    }
  }
  for (const auto& b : bispecial) {
    for (const auto& rec : b.records) {
      if (!rec.ok && b.n >= threshold) {
        os << "bispecial " << alphabet.render(rec.word) << " has b=" << rec.b << "\n";
        break;
      }
    }
  }
  os << "return words: " << crw.return_words << " distinct, " << crw.classes_checked << " classes checked, "
     << crw.classes_unchecked << " unchecked\n";
  if (!crw.holds) {
    os << "  [" << alphabet.render(crw.factor) << "] has non-palindromic return word "
       << alphabet.render(crw.return_word) << "\n";
  }
  os << "lps: " << lps.factors_checked << " factors, " << lps.positions_checked << " prefix positions\n";
  if (!lps.holds) {
    if (lps.position) {
      os << "  prefix of length " << *lps.position << " violates the lps property\n";
    } else {
      os << "  factor " << alphabet.render(lps.witness) << " violates the lps property\n";
    }
  }
  os << "defect of prefix: " << defect.final_defect << (defect.stabilized ? " (stable)" : " (growing)");
  if (!defect.first_lacunas.empty()) {
    os << ", first lacunas:";
    for (auto p : defect.first_lacunas) os << ' ' << p;
  }
  os << "\n";
  return os.str();
}

std::string RichnessReport::to_kv(const Alphabet& alphabet) const {
  std::ostringstream os;
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << "word=" << word_id << "\n";
  os << "group=" << group_id << "\n";
  os << "group_order=" << group_order << "\n";
  os << "prefix_length=" << length << "\n";
  os << "n_max=" << n_max << "\n";
  os << "threshold=" << threshold << "\n";
  os << "verdict=" << to_string(summary.verdict) << "\n";
  os << "inconsistency=" << b(summary.inconsistency) << "\n";
  os << "closed=" << b(routes.closed) << "\n";
  os << "involutively_generated=" << b(routes.involutively_generated) << "\n";
  os << "contains_all_letters=" << b(routes.contains_all_letters) << "\n";
  os << "first_distinguishing="
     << (first_distinguishing ? std::to_string(*first_distinguishing) : std::string("none")) << "\n";
  os << "candidate_threshold="
     << (candidate_threshold ? std::to_string(*candidate_threshold) : std::string("none")) << "\n";
  os << "route.tls=" << b(routes.tls) << "\n";
  os << "route.crw=" << b(routes.crw) << "\n";
  os << "route.lps=" << b(routes.lps) << "\n";
  os << "route.defect=" << b(routes.defect) << "\n";
  os << "route.identity=" << b(routes.identity) << "\n";
  os << "route.bispecial=" << b(routes.bispecial) << "\n";
  std::string tls_fail;
  for (const auto& t : tls) {
    if (!t.satisfied) tls_fail += (tls_fail.empty() ? "" : ",") + std::to_string(t.order);
  }
  os << "tls_failures=" << tls_fail << "\n";
  for (const auto& w : witnesses(alphabet)) os << "witness=" << w << "\n";
  for (const auto& t : tls) {
    if (!t.satisfied) {
      os << "tls_witness=" << t.witness(alphabet) << "\n";
      break;
    }
  }
  os << "crw.return_words=" << crw.return_words << "\n";
  os << "crw.classes_checked=" << crw.classes_checked << "\n";
  os << "crw.classes_unchecked=" << crw.classes_unchecked << "\n";
  if (!crw.holds) os << "crw.witness=" << alphabet.render(crw.return_word) << "\n";
  os << "lps.positions_checked=" << lps.positions_checked << "\n";
  if (!lps.holds) os << "lps.witness=" << alphabet.render(lps.witness) << "\n";
  os << "defect=" << defect.final_defect << "\n";
  os << "defect_stable=" << b(defect.stabilized) << "\n";
  for (const auto& w : warnings) os << "warning=" << w << "\n";
  return os.str();
}

AlternationResult alternation_check(const SymmetryGroup& group, WordView w, WordView text) {
  AlternationResult r;
  auto occ = g_occurrences(group, w, text);
  const auto antis = group.antimorphisms();
  for (std::size_t k = 1; k < occ.size(); ++k) {
    WordView prev = text.substr(occ[k - 1], w.size());
    WordView cur = text.substr(occ[k], w.size());
    bool anti = std::any_of(antis.begin(), antis.end(), [&](const SymmetryMap& t) { return t(prev) == cur; });
    if (!anti) {
      r.alternates = false;
      r.violation = k;
      break;
    }
  }
  return r;
}

bool ReproReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.ok; });
}

std::string ReproReport::to_text() const {
  std::ostringstream os;
  os << title << "\n";
  for (const auto& c : checks) {
    os << (c.ok ? "  ok    " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

CheckLine check(std::string name, bool ok, std::string detail = {}) {
  return CheckLine{std::move(name), ok, std::move(detail)};
}

std::string render_digits(WordView w) { return Alphabet::digits(16).render(w); }

long sum_p(const ComplexityTable& t, std::size_t n) {
  long s = 0;
  for (const auto& col : t.p) s += static_cast<long>(col[n]);
  return s;
}

}  // namespace

ReproReport repro_ex8(std::size_t length, std::size_t n_max) {
  ReproReport out;
  out.title = "word u (8 letters) under G";
  const auto group = presets::group_g();
  VerifyOptions opt;
  opt.length = length;
  opt.n_max = n_max;
  opt.word_id = "u";
  opt.group_id = "G";
  out.richness.push_back(verify(group, presets::word_u(), opt));
  const auto& rich = out.richness.back();
  out.checks.push_back(check("verify", rich.rich(), to_string(rich.verdict())));
  out.checks.push_back(check("group order 8", group.order() == 8, std::to_string(group.order())));

  const LanguageIndex index(presets::word_u().prefix(rich.length), n_max);
  const Alphabet digits = Alphabet::digits(8);

  std::set<Word> l2;
  for (const auto& f : index.factors(2)) l2.insert(f.word);
  std::set<Word> expected;
  for (const char* s : {"54", "62", "47", "12", "04", "76", "65", "40", "01", "23", "30", "26"}) {
    expected.insert(digits.parse(s));
  }
  out.checks.push_back(check("L2(u) has the twelve listed factors", l2 == expected));

  const auto table = complexity(index, group.involutive_antimorphisms());
  out.checks.push_back(check("dC(1) = 4", table.dc[1] == 4, std::to_string(table.dc[1])));
  auto count_g_pal = [&](std::size_t n) {
    return std::count_if(index.factors(n).begin(), index.factors(n).end(),
                         [&](const FactorInfo& f) { return group.is_palindrome(f.word); });
  };
  out.checks.push_back(check("8 G-palindromes of length 1", count_g_pal(1) == 8, std::to_string(count_g_pal(1))));
  out.checks.push_back(check("4 G-palindromes of length 2", count_g_pal(2) == 4, std::to_string(count_g_pal(2))));
  out.checks.push_back(check("dC(1) + #G = sum of P(1) + P(2) = 12",
                             table.dc[1] + 8 == 12 && sum_p(table, 1) + sum_p(table, 2) == 12));

  bool shape = true, recursion = true;
  std::string shape_detail, recursion_detail;
  const auto phi = presets::phi();
  std::size_t bispecials = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const auto& f : index.factors(n)) {
      if (!f.bispecial()) continue;
      ++bispecials;
      long b = index.bilateral_order(f.word);
      auto fixers = group.fixers(f.word);
      bool ok = b == 0 && f.ext.left.size() == 2 && f.ext.right.size() == 2 && fixers.size() == 1 &&
                index.pext(fixers.front(), f.word).size() == 1;
      if (!ok && shape) {
        shape = false;
        shape_detail = render_digits(f.word);
      }
      if (2 * n + 1 > n_max) continue;
      Letter last = letter_at(f.word, n - 1);
      Word z = phi.apply(f.word);
      z.push_back(as_char(presets::pi(last)));
      const FactorInfo* zf = index.find(z);
      bool rec_ok = last % 2 == 0 && zf && zf->bispecial() && index.bilateral_order(z) == b;
      if (!rec_ok && recursion) {
        recursion = false;
        recursion_detail = render_digits(f.word);
      }
    }
  }
  out.checks.push_back(check("bispecials: b = 0, 2+2 extensions, one fixer with one palindromic extension",
                             shape && bispecials > 0,
                             shape ? std::to_string(bispecials) + " bispecials" : shape_detail));
  out.checks.push_back(check("pi-recursion preserves bispeciality and bilateral order", recursion,
                             recursion_detail));

  const auto th = presets::thetas();
  bool commute = true;
  std::string commute_detail;
  std::size_t commute_cases = 0;
  for (std::size_t n = 1; n <= n_max && commute; ++n) {
    for (const auto& f : index.factors(n)) {
      const WordView w(f.word);
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& ti = th[i];
        const auto& tprev = th[(i + 2) % 3];
        Letter y = ti(letter_at(phi.image(letter_at(w, 0)), 0));
        Letter x = letter_at(phi.image(tprev(letter_at(w, n - 1))), 0);
        Word lhs(1, as_char(x));
        lhs += ti(phi.apply(w));
        Word rhs = phi.apply(tprev(w));
        rhs.push_back(as_char(y));
        ++commute_cases;
        if (lhs != rhs) {
          commute = false;
          commute_detail = "w=" + render_digits(w) + " i=" + std::to_string(i);
          break;
        }
      }
      if (!commute) break;
    }
  }
  out.checks.push_back(check("x/y commutation identity", commute,
                             commute ? std::to_string(commute_cases) + " cases" : commute_detail));
  return out;
}

ReproReport repro_ex6(std::size_t length, std::size_t n_max) {
  ReproReport out;
  out.title = "word v = mu(u) (6 letters) under H";
  const auto group = presets::group_h();
  VerifyOptions opt;
  opt.length = length;
  opt.n_max = n_max;
  opt.word_id = "v";
  opt.group_id = "H";
  out.richness.push_back(verify(group, presets::word_v(), opt));
  const auto& rich = out.richness.back();
  out.checks.push_back(check("verify", rich.rich(), to_string(rich.verdict())));

  const LanguageIndex vindex(presets::word_v().prefix(rich.length), n_max);
  const auto psi = presets::psis();
  const auto h2 = group.involutive_antimorphisms();
  const SymmetryMap psi012 = compose(psi[0], compose(psi[1], psi[2]));
  out.checks.push_back(check("H^(2) = {Psi0, Psi1, Psi2, Psi0 Psi1 Psi2}",
                             h2.size() == 4 && group.contains(psi012) && psi012.antimorphic() &&
                                 std::find(h2.begin(), h2.end(), psi012) != h2.end()));

  const auto table = complexity(vindex, h2);
  const auto per_psi = complexity(vindex, psi);
  out.checks.push_back(check("dC(1) = 2", table.dc[1] == 2, std::to_string(table.dc[1])));
  out.checks.push_back(check("dC(2) = 4", table.dc[2] == 4, std::to_string(table.dc[2])));
  out.checks.push_back(check("sum P(2) = 0", sum_p(table, 2) == 0, std::to_string(sum_p(table, 2))));
  out.checks.push_back(check("sum P(3) = 12", sum_p(table, 3) == 12, std::to_string(sum_p(table, 3))));
  out.checks.push_back(check("P_Psi0(1) = P_Psi2(1) = 2, P_Psi1(1) = 4",
                             per_psi.p[0][1] == 2 && per_psi.p[2][1] == 2 && per_psi.p[1][1] == 4));
  bool p3 = true;
  for (std::size_t i = 0; i < 3; ++i) p3 = p3 && per_psi.p[i][3] == 4 && per_psi.p[i][2] == 0;
  out.checks.push_back(check("P_Psi_i(3) = 4 and P_Psi_i(2) = 0", p3));

  const std::size_t u_length = rich.length / 2 + 2;
  const LanguageIndex uindex(presets::word_u().prefix(u_length), n_max);
  const auto mu = presets::mu();
  const auto eta = presets::eta();
  const auto th = presets::thetas();
  auto lift = [&](WordView w) { return mu.apply(w) + eta.image(letter_at(w, w.size() - 1)); };

  bool pal_ok = true;
  std::string pal_detail;
  std::size_t pal_cases = 0;
  for (std::size_t n = 1; 2 * n + 3 <= n_max; ++n) {
    for (const auto& f : uindex.factors(n)) {
      for (std::size_t i = 0; i < 3; ++i) {
        if (!th[i].fixes(f.word)) continue;
        ++pal_cases;
        Word z = lift(f.word);
        if (!vindex.contains(z) || !psi[i].fixes(z)) {
          if (pal_ok) pal_detail = render_digits(f.word) + " i=" + std::to_string(i);
          pal_ok = false;
        }
      }
    }
  }
  out.checks.push_back(check("Theta_i-palindromes of u lift to Psi_i-palindromes of v", pal_ok && pal_cases > 0,
                             pal_ok ? std::to_string(pal_cases) + " cases" : pal_detail));

  bool bs_ok = true;
  std::string bs_detail;
  std::size_t bs_cases = 0;
  for (std::size_t n = 1; 2 * n + 3 <= n_max; ++n) {
    for (const auto& f : uindex.factors(n)) {
      if (!f.bispecial()) continue;
      const FactorInfo* z = vindex.find(lift(f.word));
      if (!z || !z->bispecial()) {
        if (bs_ok) bs_detail = "forward: " + render_digits(f.word);
        bs_ok = false;
      }
    }
  }
  for (std::size_t m = 5; m <= n_max; ++m) {
    for (const auto& f : vindex.factors(m)) {
      if (!f.bispecial()) continue;
      ++bs_cases;
      std::size_t preimages = 0;
      if ((m - 3) % 2 == 0) {
        for (const auto& g : uindex.factors((m - 3) / 2)) {
          if (g.bispecial() && lift(g.word) == f.word) ++preimages;
        }
      }
      if (preimages != 1) {
        if (bs_ok) bs_detail = "backward: " + render_digits(f.word);
        bs_ok = false;
      }
    }
  }
  out.checks.push_back(check("bispecials of v of length >= 5 are lifts of unique bispecials of u",
                             bs_ok && bs_cases > 0, bs_ok ? std::to_string(bs_cases) + " cases" : bs_detail));
  return out;
}

SubgroupScan subgroup_scan(const SymmetryGroup& group, const WordSource& source, const VerifyOptions& options) {
  SubgroupScan scan{verify(group, source, options), {}};
  const LanguageIndex index(source.prefix(scan.whole.length), options.n_max);
  const auto g2 = group.involutive_antimorphisms();
  const auto table = complexity(index, g2);

  for (const auto& sub : group.subgroups()) {
    if (!sub.has_antimorphism()) continue;
    VerifyOptions sub_options = options;
    sub_options.group_id = options.group_id + "/" + std::to_string(sub.order());
    SubgroupResult r{sub, verify(sub, source, sub_options), false, false, false, true, {}};
    r.proper = sub.order() < group.order();
    if (r.proper && r.report.rich() && scan.whole.rich()) {
      r.index_two = 2 * sub.order() == group.order();
      r.identity_checked = true;
      for (std::size_t n = 1; n <= options.n_max; ++n) {
        if (!distinguishing_at(group, index, n)) continue;
        long sum = 0;
        for (std::size_t k = 0; k < g2.size(); ++k) {
          if (sub.contains(g2[k])) continue;
          sum += static_cast<long>(table.p[k][n] + table.p[k][n + 1]);
        }
        r.identity_values.emplace_back(n, sum);
        if (sum != static_cast<long>(sub.order())) r.identity_holds = false;
      }
    }
    scan.results.push_back(std::move(r));
  }
  return scan;
}

BrlekReutenauer brlek_reutenauer_check(const WordSource& source, std::size_t length, std::size_t n_max) {
  BrlekReutenauer r;
  const Word text = source.prefix(length);
  const auto group = presets::id_r(source.alphabet_size());
  const auto profile = g_defect(group, text);
  r.defect = profile.final_defect();
  r.defect_stable = profile.stabilized();

  const LanguageIndex index(text, n_max);
  const auto table = complexity(index, group.antimorphisms());
  const auto& p = table.p.front();
  for (std::size_t n = 0; n < n_max; ++n) {
    long t = table.dc[n] + 2 - static_cast<long>(p[n + 1]) - static_cast<long>(p[n]);
    r.t.push_back(t);
    r.partial_sum += t;
  }
  r.sum_stable = true;
  for (std::size_t n = n_max - n_max / 4; n < n_max; ++n) r.sum_stable = r.sum_stable && r.t[n] == 0;
  r.matches = r.defect_stable && r.sum_stable && static_cast<long>(2 * r.defect) == r.partial_sum;
  return r;
}

}  // namespace grich
