#pragma once

#include <cstdint>

#include "shadowlab/family.hpp"

namespace shadowlab {

// Downward closed under the shifting partial order. Checked through the
// immediate predecessors of each member (one element decremented), which
// generate the whole order.
bool is_shifted(const Family& f);

// The (i, jj)-shift, 1 <= i < jj: a member containing jj but not i moves to
// (F - jj) + i unless that set is already in f. Size is preserved.
Family shift_pair(const Family& f, int i, int jj);

// Sum over members of the sum of their elements. Every shift that changes a
// family strictly lowers it.
std::uint64_t element_sum_potential(const Family& f);

// Applies shift_pair over (i, jj) in lexicographic order, restarting from
// (1, 2) after every effective shift, until a full sweep is a no-op.
Family shift_closure(const Family& f);

}  // namespace shadowlab
