#include <gtest/gtest.h>

#include "grich/error.hpp"
#include "grich/presets.hpp"
#include "grich/verify.hpp"

using namespace grich;

namespace {

VerifyOptions opts(std::size_t n_max, std::size_t length = 2000) {
  VerifyOptions o;
  o.n_max = n_max;
  o.length = length;
  return o;
}

void expect_routes_agree(const RichnessReport& r, bool value) {
  const auto& k = r.routes;
  EXPECT_EQ(k.tls, value);
  EXPECT_EQ(k.crw, value);
  EXPECT_EQ(k.lps, value);
  EXPECT_EQ(k.defect, value);
  EXPECT_EQ(k.identity, value);
  EXPECT_EQ(k.bispecial, value);
  EXPECT_FALSE(r.summary.inconsistency);
}

}  // namespace

TEST(Verify, ThueMorseIsDihedralRich) {
  auto r = verify(dihedral_group(2), presets::thue_morse(), opts(30));
  EXPECT_EQ(r.verdict(), Verdict::Rich);
  expect_routes_agree(r, true);
  EXPECT_EQ(r.candidate_threshold, 1u);
  EXPECT_EQ(r.defect.final_defect, 0u);
}

TEST(Verify, ThueMorseIsNotReversalRich) {
  auto r = verify(presets::id_r(2), presets::thue_morse(), opts(30));
  EXPECT_EQ(r.verdict(), Verdict::Refuted);
  expect_routes_agree(r, false);
  ASSERT_GE(r.tls.size(), 3u);
  EXPECT_TRUE(r.tls[0].satisfied);
  EXPECT_TRUE(r.tls[1].satisfied);
  EXPECT_FALSE(r.tls[2].satisfied);
  EXPECT_FALSE(r.tls[2].cycle.empty());
  EXPECT_EQ(r.witnesses(Alphabet("01")).size(), 6u);
}

TEST(Verify, FibonacciIsRichWithZeroDefect) {
  auto r = verify(presets::id_r(2), presets::fibonacci(), opts(50));
  EXPECT_EQ(r.verdict(), Verdict::Rich);
  expect_routes_agree(r, true);
  EXPECT_TRUE(r.defect.identically_zero);
}

TEST(Verify, T33IsDihedralRich) {
  auto r = verify(dihedral_group(3), presets::t33(), opts(30));
  EXPECT_EQ(r.verdict(), Verdict::Rich);
  expect_routes_agree(r, true);
}

TEST(Verify, RejectsGroupWithoutAntimorphism) {
  auto g = SymmetryGroup::close({SymmetryMap({1, 0}, false)});
  EXPECT_THROW(verify(g, presets::thue_morse(), opts(5)), DomainError);
}

TEST(Verify, UnstablePrefixIsReported) {
  VerifyOptions o = opts(40, 50);
  o.max_doublings = 0;
  EXPECT_THROW(verify(presets::id_r(2), presets::fibonacci(), o), InsufficientPrefixError);
  o.max_doublings = 3;
  auto r = verify(presets::id_r(2), presets::fibonacci(), opts(20, 30));
  EXPECT_GT(r.length, 30u);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Verify, ReportFormats) {
  auto r = verify(dihedral_group(2), presets::thue_morse(), opts(10));
  Alphabet a("01");
  auto text = r.to_text(a);
  EXPECT_NE(text.find("verdict: G-rich up to n_max = 10"), std::string::npos);
  auto kv = r.to_kv(a);
  EXPECT_NE(kv.find("verdict=rich\n"), std::string::npos);
  EXPECT_NE(kv.find("route.tls="), std::string::npos);
}

TEST(AssembleVerdict, AgreementMatrix) {
  RouteOutcomes all;
  EXPECT_EQ(assemble_verdict(all).verdict, Verdict::Rich);
  all.threshold = 3;
  EXPECT_EQ(assemble_verdict(all).verdict, Verdict::AlmostRichCandidate);

  RouteOutcomes none;
  none.tls = none.crw = none.lps = none.defect = none.identity = none.bispecial = false;
  EXPECT_EQ(assemble_verdict(none).verdict, Verdict::Refuted);

  RouteOutcomes mixed;
  mixed.lps = false;
  auto m = assemble_verdict(mixed);
  EXPECT_EQ(m.verdict, Verdict::Inconsistent);
  EXPECT_TRUE(m.inconsistency);

  RouteOutcomes open;
  open.closed = false;
  EXPECT_EQ(assemble_verdict(open).verdict, Verdict::Refuted);

  RouteOutcomes c4;
  c4.involutively_generated = false;
  auto s = assemble_verdict(c4);
  EXPECT_EQ(s.verdict, Verdict::Inconsistent);
  EXPECT_TRUE(s.inconsistency);
}

TEST(Verify, CyclicAntimorphismGroupIsNeverCertified) {
  auto g = presets::cyclic_antimorphism_group();
  for (const Word& w : {Word{0, 1, 2, 3, 0, 1, 2, 3, 0, 1}, Word{0, 1, 3, 2, 2, 3, 1, 0, 0, 1, 3, 2}}) {
    auto r = verify(g, WordSource::literal(w, 4), opts(3, w.size()));
    EXPECT_FALSE(r.routes.closed);
    EXPECT_EQ(r.verdict(), Verdict::Refuted);
    EXPECT_FALSE(r.witnesses(Alphabet::digits(4)).empty());
  }
}

TEST(Alternation, ThueMorse) {
  Alphabet a("01");
  auto g = dihedral_group(2);
  EXPECT_TRUE(alternation_check(g, a.parse("011"), a.parse("01101001100")).alternates);
  EXPECT_TRUE(alternation_check(g, a.parse("001100"), a.parse("01101001100")).alternates);
}

TEST(Repro, ExampleWordU) {
  auto r = repro_ex8(2000, 30);
  for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.ok());
}

TEST(Repro, ExampleWordV) {
  auto r = repro_ex6(2000, 30);
  for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.ok());
}

TEST(SubgroupScan, WordV) {
  VerifyOptions o = opts(30);
  auto scan = subgroup_scan(presets::group_h(), presets::word_v(), o);
  EXPECT_TRUE(scan.whole.rich());
  for (std::size_t i = 0; i < 3; ++i) {
    auto h = presets::group_h_sub(i);
    auto it = std::find_if(scan.results.begin(), scan.results.end(),
                           [&](const SubgroupResult& s) { return s.subgroup == h; });
    ASSERT_NE(it, scan.results.end());
    EXPECT_TRUE(it->report.rich());
    EXPECT_TRUE(it->index_two);
    EXPECT_TRUE(it->identity_checked);
    EXPECT_TRUE(it->identity_holds);
    ASSERT_FALSE(it->identity_values.empty());
    for (auto [n, sum] : it->identity_values) EXPECT_EQ(sum, 4) << n;
  }
}

TEST(SubgroupScan, ThueMorseReversalSubgroupIsNotRich) {
  auto scan = subgroup_scan(dihedral_group(2), presets::thue_morse(), opts(20));
  EXPECT_TRUE(scan.whole.rich());
  auto it = std::find_if(scan.results.begin(), scan.results.end(),
                         [](const SubgroupResult& s) { return s.subgroup == presets::id_r(2); });
  ASSERT_NE(it, scan.results.end());
  EXPECT_FALSE(it->report.rich());
}

TEST(BrlekReutenauer, Fibonacci) {
  auto b = brlek_reutenauer_check(presets::fibonacci(), 2000, 40);
  EXPECT_EQ(b.defect, 0u);
  for (auto t : b.t) EXPECT_EQ(t, 0);
  EXPECT_TRUE(b.matches);
}

TEST(BrlekReutenauer, ThueMorseSumGrows) {
  auto b = brlek_reutenauer_check(presets::thue_morse(), 2000, 40);
  std::size_t positive = 0;
  for (std::size_t n = 20; n < b.t.size(); ++n) positive += b.t[n] > 0;
  EXPECT_GT(positive, 2u);
  EXPECT_FALSE(b.sum_stable);
}

TEST(BrlekReutenauer, Trivial) {
  auto b = brlek_reutenauer_check(presets::fibonacci(), 100, 1);
  EXPECT_TRUE(b.matches);
}
