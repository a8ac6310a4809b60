#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "shadowlab/family.hpp"

namespace shadowlab {

// ---------------------------------------------------------------------------
// Intersection predicates

// Every pair of members (a member with itself included) shares >= t elements.
bool is_t_intersecting(const Family& f, int t);

// Whether `member` satisfies |member ∩ [t + 2h]| >= t + h.
bool meets_prefix_condition(KSet member, int t, int h);

// Every member meets the prefix condition for some 0 <= h <= k - t.
bool is_pseudo_t_intersecting(const Family& f, int t);

// Least w such that every member meets the prefix condition with some h <= w.
// Zero for the empty family. Throws DomainError when f is not pseudo
// t-intersecting.
int width(const Family& f, int t);

// Largest h in [0, w] with the prefix condition. DomainError if none.
int height(KSet member, int t, int w);

// member - [t + 2 height(member, t, w)].
KSet tail(KSet member, int t, int w);

// ---------------------------------------------------------------------------
// Tail partition and restricted shadows

struct TailPartition {
  int t = 0;
  int width = 0;
  // tail -> members carrying that tail
  std::map<KSet, Family> entries;

  std::size_t total_size() const;
};

// Groups the members of a pseudo t-intersecting family by tail, using
// w = width(f, t). Members of height below w are checked to meet the prefix
// condition with equality.
TailPartition tail_partition(const Family& f, int t);

// (k - j)-subsets of `member` that contain `keep`, i.e. delete j elements of
// member - keep.
Family restricted_shadow_of(KSet member, KSet keep, int j);

// Union over members of the (k - j)-subsets containing the member's tail.
// Requires 0 < j <= t and a pseudo t-intersecting family.
Family tail_restricted_shadow(const Family& f, int t, int j);

// Same union, kept separate per tail.
std::map<KSet, Family> per_tail_restricted_shadows(const TailPartition& partition, int k, int j);

// Restricted shadow with respect to [m]: delete j elements of F ∩ [m] only.
// Members with fewer than j elements in [m] contribute nothing. 0 < j < k.
Family prefix_restricted_shadow(const Family& f, int m, int j);

// ---------------------------------------------------------------------------
// Stars and semistars

// Some t-set lies in every member. Vacuously true for the empty family.
bool is_t_star(const Family& f, int t);

// A (t+1)-set D with |F ∩ D| >= t for all members, searched over the
// (t+1)-subsets of the member union together with [t + 1].
std::optional<KSet> find_semistar_center(const Family& f, int t);
bool is_semistar(const Family& f, int t);

// ---------------------------------------------------------------------------
// Base of a family: traces on [2k - t]

struct BaseDecomposition {
  int k = 0;
  int t = 0;
  SetSystem base;
  std::map<int, Family> levels;  // nonempty levels only

  // b_ell, zero for absent levels.
  std::size_t count(int ell) const;
};

BaseDecomposition base_decomposition(const Family& f, int k, int t);

// Structure of the (t+1)-level of the base of a shifted t-intersecting
// family. When A3 = [t+2] - {t} is a trace the family sits inside the
// first Frankl family; otherwise the level is {[t] + x : t < x <= t + s}.
struct NextLevelReport {
  bool a3_in_base = false;
  bool contained_in_first_frankl = false;  // only meaningful when a3_in_base
  bool consecutive = false;
  std::size_t s = 0;  // b_{t+1}
};

// Requires f shifted and t-intersecting (checked). Throws InvariantViolation
// if the structure fails to materialize.
NextLevelReport classify_next_level(const Family& f, int k, int t);

}  // namespace shadowlab
