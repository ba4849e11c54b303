#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grich/lang_index.hpp"
#include "grich/palin.hpp"
#include "grich/presets.hpp"
#include "grich/symgraph.hpp"
#include "grich/symmetry.hpp"
#include "grich/words.hpp"

namespace grich {

enum class Verdict { Rich, AlmostRichCandidate, Refuted, Inconsistent };

std::string to_string(Verdict v);

struct VerifyOptions {
  std::size_t length = 2000;
  std::size_t n_max = 30;
  std::size_t threshold = 1;
  /// Doublings of the prefix allowed when factor sets are not yet stable.
  std::size_t max_doublings = 3;
  std::string word_id = "word";
  std::string group_id = "group";
};

struct CrwResult {
  std::size_t classes_checked = 0;
  std::size_t classes_unchecked = 0;
  std::size_t return_words = 0;
  bool holds = true;
  Word factor;       // set when refuted
  Word return_word;  // a non-palindromic complete return word of [factor]
  /// Every extracted return word v of [w] has a suffix theta(w a) where w a is its prefix.
  bool shape_ok = true;
  Word shape_witness;
};

struct LpsResult {
  std::size_t factors_checked = 0;
  std::size_t positions_checked = 0;
  bool holds = true;
  /// Violating word: an indexed factor or the prefix ending at `position`.
  Word witness;
  std::optional<std::size_t> position;
};

struct DefectSummary {
  std::size_t length = 0;
  std::size_t final_defect = 0;
  bool stabilized = true;
  bool identically_zero = true;
  std::vector<std::size_t> first_lacunas;
};

/// Per-route conclusion at the requested threshold: true means the route supports richness.
struct RouteOutcomes {
  bool closed = true;
  bool tls = true;
  bool crw = true;
  bool lps = true;
  bool defect = true;
  bool identity = true;
  bool bispecial = true;
  std::size_t threshold = 1;
  bool contains_all_letters = true;
  bool involutively_generated = true;
};

struct VerdictSummary {
  Verdict verdict = Verdict::Rich;
  bool inconsistency = false;
  std::vector<std::string> notes;
};

/// Agreement matrix reduction; separated from verify() so that it can be exercised directly.
VerdictSummary assemble_verdict(const RouteOutcomes& routes);

struct RichnessReport {
  std::string word_id;
  std::string group_id;
  std::size_t group_order = 0;
  std::size_t length = 0;
  std::size_t n_max = 0;
  std::size_t threshold = 1;
  std::vector<std::string> warnings;

  std::optional<std::pair<Word, Word>> closure_witness;
  std::optional<std::size_t> first_distinguishing;
  std::vector<TlsVerdict> tls;  // n = 1..n_max
  /// Least N with Property G-tls on [N, n_max].
  std::optional<std::size_t> candidate_threshold;
  std::vector<ComplexityIdentity> identity;  // n = 1..n_max
  std::vector<BispecialReport> bispecial;    // n = 1..n_max
  CrwResult crw;
  LpsResult lps;
  DefectSummary defect;
  RouteOutcomes routes;
  VerdictSummary summary;

  Verdict verdict() const { return summary.verdict; }
  bool rich() const { return summary.verdict == Verdict::Rich; }
  /// One concrete counterexample per route that does not support richness.
  std::vector<std::string> witnesses(const Alphabet& alphabet) const;
  std::string to_text(const Alphabet& alphabet) const;
  std::string to_kv(const Alphabet& alphabet) const;
};

/// Runs every characterization of G-richness on a prefix of the source.
/// Throws DomainError for groups without antimorphisms, InsufficientPrefixError
/// when the factor sets up to n_max + 2 do not stabilize.
RichnessReport verify(const SymmetryGroup& group, const WordSource& source, const VerifyOptions& options);

struct AlternationResult {
  bool alternates = true;
  /// Index into the G-occurrence list of the first occurrence that breaks alternation.
  std::optional<std::size_t> violation;
};

/// Each G-occurrence of w is an antimorphic image of the one before it.
AlternationResult alternation_check(const SymmetryGroup& group, WordView w, WordView text);

struct CheckLine {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ReproReport {
  std::string title;
  std::vector<CheckLine> checks;
  std::vector<RichnessReport> richness;

  bool ok() const;
  std::string to_text() const;
};

ReproReport repro_ex8(std::size_t length, std::size_t n_max);
ReproReport repro_ex6(std::size_t length, std::size_t n_max);

struct SubgroupResult {
  SymmetryGroup subgroup;
  RichnessReport report;
  bool proper = false;
  /// Checked only for proper subgroups found rich alongside the group.
  bool index_two = false;
  bool identity_checked = false;
  bool identity_holds = true;
  std::vector<std::pair<std::size_t, long>> identity_values;  // (n, sum)
};

struct SubgroupScan {
  RichnessReport whole;
  std::vector<SubgroupResult> results;
};

/// verify() on every subgroup containing an antimorphism, plus the index-two identity.
SubgroupScan subgroup_scan(const SymmetryGroup& group, const WordSource& source, const VerifyOptions& options);

struct BrlekReutenauer {
  std::size_t defect = 0;
  bool defect_stable = false;
  std::vector<long> t;  // T(n), n = 0..n_max-1
  long partial_sum = 0;
  bool sum_stable = false;
  bool matches = false;
};

BrlekReutenauer brlek_reutenauer_check(const WordSource& source, std::size_t length, std::size_t n_max);

}  // namespace grich
