#include "shadowlab/shift.hpp"

#include <algorithm>
#include <unordered_set>

#include "shadowlab/errors.hpp"

namespace shadowlab {

bool is_shifted(const Family& f) {
  for (KSet m : f) {
    for (int e : m.elements()) {
      if (e > 1 && !m.contains(e - 1) && !f.contains(m.without(e).with(e - 1))) return false;
    }
  }
  return true;
}

namespace {

struct WordHash {
  std::size_t operator()(std::uint64_t x) const {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

using MemberSet = std::unordered_set<std::uint64_t, WordHash>;

// In-place (i, jj)-shift on `members`, with `index` mirroring its contents.
// Sequential replacement matches the simultaneous definition: targets never
// contain jj, so no moved-away member can be a target, and distinct movers
// have distinct targets.
bool shift_in_place(std::vector<std::uint64_t>& members, MemberSet& index, int i, int jj) {
  const std::uint64_t bi = std::uint64_t{1} << (i - 1);
  const std::uint64_t bj = std::uint64_t{1} << (jj - 1);
  bool changed = false;
  for (std::uint64_t& m : members) {
    if ((m & bj) == 0 || (m & bi) != 0) continue;
    const std::uint64_t target = (m & ~bj) | bi;
    if (index.count(target) != 0) continue;
    index.erase(m);
    index.insert(target);
    m = target;
    changed = true;
  }
  return changed;
}

std::uint64_t potential_of(const std::vector<std::uint64_t>& members) {
  std::uint64_t total = 0;
  for (std::uint64_t m : members) {
    for (int e : KSet{m}.elements()) total += static_cast<std::uint64_t>(e);
  }
  return total;
}

Family to_family(int k, const std::vector<std::uint64_t>& members) {
  std::vector<KSet> out;
  out.reserve(members.size());
  for (std::uint64_t m : members) out.emplace_back(m);
  return Family(k, std::move(out));
}

}  // namespace

Family shift_pair(const Family& f, int i, int jj) {
  require(i >= 1 && i < jj && jj <= kMaxGround,
          "shift_pair: need 1 <= i < jj <= " + std::to_string(kMaxGround));
  std::vector<std::uint64_t> members;
  members.reserve(f.size());
  for (KSet m : f) members.push_back(m.bits());
  MemberSet index(members.begin(), members.end());
  shift_in_place(members, index, i, jj);
  return to_family(f.k(), members);
}

std::uint64_t element_sum_potential(const Family& f) {
  std::uint64_t total = 0;
  for (KSet m : f) {
    for (int e : m.elements()) total += static_cast<std::uint64_t>(e);
  }
  return total;
}

Family shift_closure(const Family& f) {
  std::vector<std::uint64_t> members;
  members.reserve(f.size());
  for (KSet m : f) members.push_back(m.bits());
  MemberSet index(members.begin(), members.end());
  index.reserve(members.size() * 2);

  const int top = f.max_element();
  std::uint64_t potential = potential_of(members);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < top && !changed; ++i) {
      for (int jj = i + 1; jj <= top && !changed; ++jj) {
        if (shift_in_place(members, index, i, jj)) {
          const std::uint64_t next = potential_of(members);
          ensure(next < potential, "shift_closure: potential did not decrease");
          potential = next;
          changed = true;
        }
      }
    }
  }
  return to_family(f.k(), members);
}

}  // namespace shadowlab
