#include "shadowlab/canonical.hpp"

#include <string>

#include "shadowlab/errors.hpp"
#include "shadowlab/structure.hpp"

namespace shadowlab {

namespace {

void check_nkt(int n, int k, int t) {
  require(t >= 1 && k > t, "need k > t >= 1");
  require(n >= k, "need n >= k");
}

}  // namespace

Family frankl_family(int n, int k, int t, int h) {
  check_nkt(n, k, t);
  require(h >= 0 && h <= k - t, "frankl_family: need 0 <= h <= k - t, got h=" + std::to_string(h));
  return enumerate_ksubsets(n, k).filter([&](KSet a) { return meets_prefix_condition(a, t, h); });
}

Family full_star(int n, int k, int t) {
  require(t >= 0 && k >= t && n >= k, "full_star: need n >= k >= t");
  const KSet core = KSet::prefix(t);
  return enumerate_ksubsets(n, k).filter([&](KSet a) { return core.subset_of(a); });
}

Family hm_family(int n, int k, int t) {
  require(t >= 1 && k + 1 > t && n >= k + 1, "hm_family: need n >= k + 1 > t >= 1");
  const KSet core = KSet::prefix(t);
  const KSet window = KSet::interval(t + 1, k + 1);
  std::vector<KSet> members;
  for (KSet a : enumerate_ksubsets(n, k)) {
    if (core.subset_of(a) && !(a & window).empty()) members.push_back(a);
  }
  for (int x = 1; x <= t; ++x) members.push_back(KSet::prefix(k + 1).without(x));
  return Family(k, std::move(members));
}

Family example15(int n, int k, int t, int s) {
  require(k > t && t > 2, "example15: need k > t > 2");
  require(s >= 0 && s < k - t - 1, "example15: need 0 <= s < k - t - 1");
  require(n > 2 * k - t, "example15: need n > 2k - t");
  require(n <= kMaxGround, "example15: n exceeds the ground limit");
  const KSet head = KSet::prefix(k - 1 + s);
  std::vector<KSet> members;
  for (KSet a : enumerate_ksubsets(2 * k - t, k)) {
    if ((a & head).size() >= t + s) members.push_back(a);
  }
  for_each_subset_of_size(head, k - 1, [&](KSet b0) {
    for (int x = 2 * k - t + 1; x <= n; ++x) members.push_back(b0.with(x));
  });
  Family f(k, std::move(members));
  ensure(is_t_intersecting(f, t), "example15: construction is not t-intersecting");
  return f;
}

WitnessSets witness_sets(int k, int t, int w) {
  require(t >= 1 && k > t, "witness_sets: need k > t >= 1");
  require(w >= 1 && w <= k - t, "witness_sets: need 1 <= w <= k - t");
  KSet e = KSet::prefix(t - 1);
  for (int x = t + 1; x <= t + 2 * w + 1; x += 2) e = e.with(x);
  e = e | KSet::interval(t + 2 * w + 2, k + w + 1);
  KSet d = KSet::prefix(t);
  for (int x = t + 2; x <= t + 2 * w; x += 2) d = d.with(x);
  ensure(e.size() == k, "witness_sets: |E| != k");
  ensure(d.size() == t + w, "witness_sets: |D| != t + w");
  ensure((e & d) == KSet::prefix(t - 1), "witness_sets: E ∩ D != [t-1]");
  return {e, d};
}

WitnessSets full_width_witness_sets(int k, int t) {
  require(t >= 1 && k > t, "full_width_witness_sets: need k > t >= 1");
  KSet e = KSet::prefix(t - 1);
  for (int x = t + 1; x <= 2 * k - t - 1; x += 2) e = e.with(x);
  e = e.with(2 * k - t);
  KSet d = KSet::prefix(t);
  for (int x = t + 2; x <= 2 * k - t - 2; x += 2) d = d.with(x);
  d = d.with(2 * k - t + 1);
  ensure(e.size() == k && d.size() == k, "full_width_witness_sets: wrong sizes");
  ensure((e & d) == KSet::prefix(t - 1), "full_width_witness_sets: E ∩ D != [t-1]");
  return {e, d};
}

}  // namespace shadowlab
