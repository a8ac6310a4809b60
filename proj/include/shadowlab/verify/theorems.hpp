#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shadowlab/family.hpp"

namespace shadowlab::verify {

// One checker per result. The command-line keys are listed next to each.
enum class TheoremId {
  IntersectingShadow,     // thm1.3   ell-shadow ratio of t-intersecting families, equality cases
  LargeFamilyShadow,      // thm1.4   improved j-shadow ratio above the size threshold
  WidthShadow,            // thm2.10  tail-restricted shadow of pseudo t-intersecting families
  StarSubfamilyShadow,    // prop5.3  subfamilies of A_0 ∪ A_1 and of A_0
  StarShadowIdentity,     // claim5.4 shadow of a star subfamily through its traces
  SemistarShadow,         // thm5.5   t-intersecting (t+1)-semistars
  SemistarCoreCount,      // claim5.6 (t+1)|F_0| >= |F_2| for shifted semistars centred at [t+1]
  BaseStructure,          // prop6.4  base on [2k-t]: properties (i)-(iv) and level counts
  NonStarMaximum,         // thm6.2   largest non-star t-intersecting family
  NonStarShadow,          // thm6.7   strict star bound when b_{t+1} >= t+1
  NonStarThreshold,       // cor6.8   strict star bound above the explicit size
  WitnessDichotomy,       // prop7.1  every member meets (i) or (ii) once width exceeds w
  SplitWidthShadow,       // prop7.2  inner/outer split implies the width-w ratio
  WidthThreshold,         // thm7.3   width-w ratio above twice the surrogate threshold
  ConstructionNecessity,  // prop1.6  the two-part construction beats the large-family bound
};

inline constexpr std::size_t kTheoremCount = 15;

std::string_view theorem_key(TheoremId id);
std::optional<TheoremId> theorem_from_key(std::string_view key);
std::vector<TheoremId> all_theorems();

enum class Verdict { Holds, EqualityCasesExact, Counterexample, Inconclusive };

std::string_view to_string(Verdict v);

struct TheoremParams {
  int n = 0;
  int k = 0;
  int t = 0;
  int j = 0;    // 0 = every admissible j where the checker allows it
  int ell = 0;
  int w = 0;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

struct TheoremReport {
  TheoremId id = TheoremId::IntersectingShadow;
  TheoremParams params;
  Verdict verdict = Verdict::Holds;
  std::optional<Family> witness;
  std::string detail;               // why the witness fails, when there is one
  std::string corpus;               // where the checked families came from
  std::size_t families_checked = 0;
  std::size_t families_eligible = 0;  // families meeting the hypothesis
  std::size_t equality_cases = 0;
  std::vector<std::pair<std::string, std::string>> facts;  // named exact values
  std::vector<std::string> notes;
  double runtime_ms = 0;
};

// Whether the hypothesis of the checked statement is enforced or assumed.
// Assume feeds every family straight to the conclusion; the test suite uses
// it to confirm that the checkers do detect violations.
enum class HypothesisMode { Filter, Assume };

// Checks the statement on its default corpus: exhaustive enumeration when
// C(n, k) is small enough, otherwise params.samples generated families
// (seeds params.seed, params.seed + 1, ...) plus the canonical families.
// Throws ContractViolation for parameters outside the statement's range and
// CapacityError when a required oracle is out of reach.
TheoremReport check_theorem(TheoremId id, const TheoremParams& params);

// Checks the statement on the given families only.
TheoremReport check_theorem_on(TheoremId id, const TheoremParams& params,
                               std::span<const Family> corpus,
                               HypothesisMode mode = HypothesisMode::Filter);

// Re-evaluates the conclusion on the report's witness; true when the
// witness still violates it.
bool recheck_violation(const TheoremReport& report);

// Whether the hypothesis holds for a single family.
bool hypothesis_holds(TheoremId id, const TheoremParams& params, const Family& f);

}  // namespace shadowlab::verify
