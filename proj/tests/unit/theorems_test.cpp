#include <gtest/gtest.h>

#include "families.hpp"
#include "shadowlab/canonical.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/verify/scan.hpp"
#include "shadowlab/verify/theorems.hpp"

using namespace shadowlab;
using namespace shadowlab::verify;
using testing_support::fam;

namespace {

TheoremParams params(int n, int k, int t, int j, int ell = 0, int w = 0, std::size_t samples = 60) {
  TheoremParams p;
  p.n = n;
  p.k = k;
  p.t = t;
  p.j = j;
  p.ell = ell;
  p.w = w;
  p.samples = samples;
  return p;
}

std::string fact(const TheoremReport& r, const std::string& key) {
  for (const auto& [name, value] : r.facts) {
    if (name == key) return value;
  }
  return "";
}

struct Mutation {
  TheoremId id;
  TheoremParams p;
  Family corrupted;
};

// One deliberately broken input per checker. With the hypothesis assumed
// each must come back as a counterexample whose witness re-checks; with the
// hypothesis enforced none of them is eligible.
std::vector<Mutation> mutations() {
  return {
      {TheoremId::IntersectingShadow, params(4, 2, 1, 0, 1), enumerate_ksubsets(4, 2)},
      {TheoremId::LargeFamilyShadow, params(12, 4, 2, 1), enumerate_ksubsets(12, 4)},
      {TheoremId::WidthShadow, params(6, 3, 2, 1), fam(3, {{3, 4, 5}})},
      {TheoremId::StarSubfamilyShadow, params(9, 5, 3, 2), enumerate_ksubsets(9, 5)},
      {TheoremId::StarShadowIdentity, params(8, 4, 2, 0), fam(4, {{3, 4, 5, 6}})},
      {TheoremId::SemistarShadow, params(9, 5, 3, 2), enumerate_ksubsets(9, 5)},
      {TheoremId::SemistarCoreCount, params(9, 5, 3, 0), fam(5, {{1, 2, 3, 5, 6}})},
      {TheoremId::BaseStructure, params(8, 3, 1, 0), fam(3, {{1, 2, 3}, {4, 5, 6}})},
      {TheoremId::NonStarMaximum, params(6, 3, 1, 0), enumerate_ksubsets(6, 3)},
      {TheoremId::NonStarShadow, params(10, 4, 1, 1), enumerate_ksubsets(10, 4)},
      {TheoremId::NonStarThreshold, params(12, 4, 1, 1), enumerate_ksubsets(12, 4)},
      {TheoremId::WitnessDichotomy, params(12, 5, 2, 0, 0, 1), fam(5, {{1, 2, 3, 4, 5}})},
      {TheoremId::SplitWidthShadow, params(12, 5, 2, 1, 0, 1), enumerate_ksubsets(12, 5)},
      {TheoremId::WidthThreshold, params(14, 5, 2, 1, 0, 1), enumerate_ksubsets(14, 5)},
  };
}

}  // namespace

TEST(Theorems, KeysRoundTrip) {
  const auto all = all_theorems();
  EXPECT_EQ(all.size(), kTheoremCount);
  for (TheoremId id : all) EXPECT_EQ(theorem_from_key(theorem_key(id)), id);
  EXPECT_FALSE(theorem_from_key("nope").has_value());
  EXPECT_EQ(to_string(Verdict::EqualityCasesExact), "equality-cases-exact");
  EXPECT_EQ(to_string(Verdict::Counterexample), "counterexample");
}

TEST(Theorems, CheckersDetectCorruptedInputs) {
  const auto cases = mutations();
  EXPECT_EQ(cases.size(), kTheoremCount - 1);
  for (const Mutation& m : cases) {
    const std::span<const Family> corpus(&m.corrupted, 1);
    const TheoremReport broken = check_theorem_on(m.id, m.p, corpus, HypothesisMode::Assume);
    EXPECT_EQ(broken.verdict, Verdict::Counterexample) << theorem_key(m.id);
    ASSERT_TRUE(broken.witness.has_value()) << theorem_key(m.id);
    EXPECT_FALSE(broken.detail.empty()) << theorem_key(m.id);
    EXPECT_TRUE(recheck_violation(broken)) << theorem_key(m.id);

    const TheoremReport filtered = check_theorem_on(m.id, m.p, corpus, HypothesisMode::Filter);
    EXPECT_NE(filtered.verdict, Verdict::Counterexample) << theorem_key(m.id);
    EXPECT_EQ(filtered.families_eligible, 0U) << theorem_key(m.id);
    EXPECT_FALSE(hypothesis_holds(m.id, m.p, m.corrupted)) << theorem_key(m.id);
  }
}

TEST(Theorems, CanonicalFamiliesPass) {
  const TheoremParams p = params(12, 5, 2, 1);
  std::vector<Family> corpus;
  for (int h = 0; h <= 3; ++h) corpus.push_back(frankl_family(12, 5, 2, h));
  const TheoremReport r = check_theorem_on(TheoremId::WidthShadow, p, corpus);
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.families_eligible, 4U);
  EXPECT_FALSE(recheck_violation(r));
}

TEST(Theorems, IntersectingShadowSmallOracle) {
  const TheoremReport r = check_theorem(TheoremId::IntersectingShadow, params(4, 2, 1, 0, 1));
  EXPECT_EQ(r.verdict, Verdict::EqualityCasesExact);
  EXPECT_EQ(r.families_checked, 27U);
  EXPECT_EQ(r.equality_cases, 4U);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Theorems, IntersectingShadowSampledBeyondOracle) {
  const TheoremReport r = check_theorem(TheoremId::IntersectingShadow, params(9, 4, 2, 0, 2, 0, 20));
  EXPECT_NE(r.verdict, Verdict::Counterexample);
  EXPECT_EQ(r.corpus.find("exhaustive"), std::string::npos);
  EXPECT_GT(r.families_eligible, 0U);
}

TEST(Theorems, OutOfRangeParameters) {
  EXPECT_THROW(check_theorem(TheoremId::LargeFamilyShadow, params(12, 4, 2, 2)), ContractViolation);
  EXPECT_THROW(check_theorem(TheoremId::SemistarShadow, params(9, 5, 3, 1)), ContractViolation);
  EXPECT_THROW(check_theorem(TheoremId::IntersectingShadow, params(4, 2, 1, 0, 2)), ContractViolation);
  EXPECT_THROW(check_theorem_on(TheoremId::ConstructionNecessity, params(0, 0, 0, 0), {}), ContractViolation);
}

TEST(Theorems, NonStarMaximumExceptionalCase) {
  const TheoremReport r = check_theorem(TheoremId::NonStarMaximum, params(6, 3, 1, 0));
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(fact(r, "max_nonstar_size"), "10");
  EXPECT_EQ(fact(r, "first_frankl_size"), "10");
  EXPECT_EQ(fact(r, "hm_size"), "10");
  const TheoremReport exact = check_theorem(TheoremId::NonStarMaximum, params(5, 2, 1, 0));
  EXPECT_EQ(exact.verdict, Verdict::EqualityCasesExact);
}

TEST(Theorems, StarIdentityHolds) {
  const TheoremReport r = check_theorem(TheoremId::StarShadowIdentity, params(8, 4, 2, 0));
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_GT(r.families_eligible, 0U);
}

TEST(Theorems, SampledChecksAreDeterministic) {
  TheoremParams p = params(12, 4, 2, 1);
  p.seed = 11;
  const TheoremReport a = check_theorem(TheoremId::WidthShadow, p);
  const TheoremReport b = check_theorem(TheoremId::WidthShadow, p);
  EXPECT_EQ(a.verdict, Verdict::Holds);
  EXPECT_EQ(a.families_checked, b.families_checked);
  EXPECT_EQ(a.families_eligible, b.families_eligible);
  EXPECT_EQ(a.facts, b.facts);
}

TEST(Theorems, SampledChecksHold) {
  const std::vector<std::pair<TheoremId, TheoremParams>> runs{
      {TheoremId::LargeFamilyShadow, params(12, 4, 2, 1)},
      {TheoremId::StarSubfamilyShadow, params(9, 5, 3, 2)},
      {TheoremId::SemistarShadow, params(9, 5, 3, 2)},
      {TheoremId::SemistarCoreCount, params(9, 5, 3, 0)},
      {TheoremId::BaseStructure, params(12, 4, 1, 0)},
      {TheoremId::NonStarShadow, params(10, 4, 1, 1)},
      {TheoremId::WitnessDichotomy, params(12, 5, 2, 0, 0, 1)},
      {TheoremId::SplitWidthShadow, params(12, 5, 2, 1, 0, 1)},
  };
  for (const auto& [id, p] : runs) {
    const TheoremReport r = check_theorem(id, p);
    EXPECT_NE(r.verdict, Verdict::Counterexample) << theorem_key(id) << ": " << r.detail;
    EXPECT_GT(r.families_eligible, 0U) << theorem_key(id);
  }
}

TEST(Scan, ConstructionRows) {
  const ScanReport report = scan_example15(6, 3, 1, {0, 2}, {10, 14});
  EXPECT_FALSE(report.rows.empty());
  for (const ScanRow& row : report.rows) {
    EXPECT_TRUE(row.t_intersecting);
    EXPECT_LE(BigInt(row.shadow_size), row.shadow_upper);
    EXPECT_EQ(row.ratio, ExactRatio(BigInt(row.shadow_size), BigInt(row.family_size)));
    EXPECT_EQ(row.layer_size, binomial(9, 6));
    EXPECT_EQ(row.beats_bound, row.t_intersecting && row.above_layer && row.ratio < row.bound);
  }
  // s = 2 is out of range at (6, 3): skipped with a note
  EXPECT_FALSE(report.notes.empty());
}

TEST(Scan, SmallWitnessSearchFindsNothingBelowNine) {
  std::vector<std::string> notes;
  EXPECT_FALSE(find_construction_witness(8, 40, ScanOptions{}, &notes).has_value());
}
