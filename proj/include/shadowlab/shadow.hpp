#pragma once

#include "shadowlab/exact.hpp"
#include "shadowlab/family.hpp"

namespace shadowlab {

// The j'th shadow: every (k - j)-set contained in some member. Requires
// 0 < j < k. Computed by j rounds of single-element deletion.
Family shadow(const Family& f, int j);

// Same result as shadow(), generated directly from the (k - j)-subsets of
// each member. Kept as a cross-check for the iterated route.
Family shadow_by_subsets(const Family& f, int j);

// The ell-shadow: every ell-set contained in some member, 0 <= ell < k.
// Equal to shadow(f, k - ell); ell = 0 gives {∅} for a nonempty family.
Family sigma(const Family& f, int ell);

// |shadow(f, j)| / |f|. Requires a nonempty family.
ExactRatio shadow_ratio(const Family& f, int j);

}  // namespace shadowlab
