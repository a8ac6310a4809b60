#include "shadowlab/shadow.hpp"

#include <algorithm>
#include <string>

#include "shadowlab/errors.hpp"

namespace shadowlab {

namespace {

Family delete_one(const Family& f) {
  std::vector<KSet> out;
  out.reserve(f.size() * static_cast<std::size_t>(f.k()));
  for (KSet m : f) {
    for (std::uint64_t rest = m.bits(); rest != 0; rest &= rest - 1) {
      out.emplace_back(m.bits() & ~(rest & (~rest + 1)));
    }
  }
  return Family(f.k() - 1, std::move(out));
}

// Shadow for 0 <= j <= k; the public entry points narrow the range.
Family shadow_unchecked(const Family& f, int j) {
  Family current = f;
  for (int step = 0; step < j; ++step) current = delete_one(current);
  if (f.empty()) return Family(f.k() - j);
  return current;
}

}  // namespace

Family shadow(const Family& f, int j) {
  require(j > 0 && j < f.k(), "shadow: need 0 < j < k, got j=" + std::to_string(j) +
                                  " k=" + std::to_string(f.k()));
  return shadow_unchecked(f, j);
}

Family shadow_by_subsets(const Family& f, int j) {
  require(j > 0 && j < f.k(), "shadow_by_subsets: need 0 < j < k");
  std::vector<KSet> out;
  for (KSet m : f) {
    for_each_subset_of_size(m, f.k() - j, [&](KSet s) { out.push_back(s); });
  }
  return Family(f.k() - j, std::move(out));
}

Family sigma(const Family& f, int ell) {
  require(ell >= 0 && ell < f.k(), "sigma: need 0 <= ell < k, got ell=" + std::to_string(ell) +
                                       " k=" + std::to_string(f.k()));
  return shadow_unchecked(f, f.k() - ell);
}

ExactRatio shadow_ratio(const Family& f, int j) {
  require(!f.empty(), "shadow_ratio: empty family");
  const Family s = shadow(f, j);
  return ExactRatio(BigInt(s.size()), BigInt(f.size()));
}

}  // namespace shadowlab
