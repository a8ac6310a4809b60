#pragma once

#include "shadowlab/family.hpp"

namespace shadowlab {

// Frankl families { A : |A ∩ [t + 2h]| >= t + h }, 0 <= h <= k - t.
// Always t-intersecting.
Family frankl_family(int n, int k, int t, int h);

// { A : [t] ⊂ A }, the same family as frankl_family(n, k, t, 0).
Family full_star(int n, int k, int t);

// Hilton–Milner type family: members containing [t] that meet [t+1, k+1],
// plus the t sets [k+1] - {x} for x in [t]. Requires n >= k + 1 > t.
Family hm_family(int n, int k, int t);

// Two-part construction A ∪ B: A holds the k-subsets of [2k - t] with at
// least t + s elements in [k - 1 + s]; B holds B0 + x with B0 a (k-1)-subset
// of [k - 1 + s] and x in [2k - t + 1, n]. Requires k > t > 2,
// 0 <= s < k - t - 1, n > 2k - t. The result is checked to be t-intersecting.
Family example15(int n, int k, int t, int s);

struct WitnessSets {
  KSet e;
  KSet d;
};

// E = [t-1] ∪ {t+1, t+3, ..., t+2w+1} ∪ [t+2w+2, k+w+1] and
// D = [t] ∪ {t+2, t+4, ..., t+2w}, for 1 <= w <= k - t.
// |E| = k and E ∩ D = [t-1] are checked after construction.
WitnessSets witness_sets(int k, int t, int w);

// The full-width pair: E = [t-1] ∪ {t+1, t+3, ..., 2k-t-1} ∪ {2k-t} and
// D = [t] ∪ {t+2, t+4, ..., 2k-t-2} ∪ {2k-t+1}, both k-sets meeting in [t-1].
WitnessSets full_width_witness_sets(int k, int t);

}  // namespace shadowlab
