#include "shadowlab/structure.hpp"

#include <algorithm>
#include <string>

#include "shadowlab/errors.hpp"
#include "shadowlab/shift.hpp"

namespace shadowlab {

bool is_t_intersecting(const Family& f, int t) {
  require(t >= 1, "is_t_intersecting: need t >= 1");
  const auto members = f.members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (members[a].size() < t) return false;
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[a].intersection_size(members[b]) < t) return false;
    }
  }
  return true;
}

bool meets_prefix_condition(KSet member, int t, int h) {
  return prefix_intersection_size(member, t + 2 * h) >= t + h;
}

namespace {

// Smallest h in [0, k - t] meeting the prefix condition, or -1.
int lowest_valid_h(KSet member, int k, int t) {
  for (int h = 0; h <= k - t; ++h) {
    if (meets_prefix_condition(member, t, h)) return h;
  }
  return -1;
}

void check_pseudo_args(const Family& f, int t) {
  require(t >= 1, "need t >= 1");
  require(f.empty() || f.k() >= t, "need k >= t, got k=" + std::to_string(f.k()) + " t=" + std::to_string(t));
}

}  // namespace

bool is_pseudo_t_intersecting(const Family& f, int t) {
  check_pseudo_args(f, t);
  return std::all_of(f.begin(), f.end(), [&](KSet m) { return lowest_valid_h(m, f.k(), t) >= 0; });
}

int width(const Family& f, int t) {
  check_pseudo_args(f, t);
  int w = 0;
  for (KSet m : f) {
    const int h = lowest_valid_h(m, f.k(), t);
    if (h < 0) {
      throw DomainError("width: member " + m.to_string() + " is not pseudo " + std::to_string(t) +
                        "-intersecting");
    }
    w = std::max(w, h);
  }
  return w;
}

int height(KSet member, int t, int w) {
  require(t >= 1 && w >= 0, "height: need t >= 1 and w >= 0");
  for (int h = w; h >= 0; --h) {
    if (meets_prefix_condition(member, t, h)) return h;
  }
  throw DomainError("height: " + member.to_string() + " meets no prefix condition with h <= " +
                    std::to_string(w));
}

KSet tail(KSet member, int t, int w) { return member - KSet::prefix(t + 2 * height(member, t, w)); }

std::size_t TailPartition::total_size() const {
  std::size_t total = 0;
  for (const auto& [tail_set, members] : entries) total += members.size();
  return total;
}

TailPartition tail_partition(const Family& f, int t) {
  TailPartition out;
  out.t = t;
  out.width = width(f, t);
  std::map<KSet, std::vector<KSet>> groups;
  for (KSet m : f) {
    const int h = height(m, t, out.width);
    if (h < out.width) {
      ensure(prefix_intersection_size(m, t + 2 * h) == t + h,
             "tail_partition: member " + m.to_string() + " below full width has a slack prefix");
    }
    groups[m - KSet::prefix(t + 2 * h)].push_back(m);
  }
  for (auto& [tail_set, members] : groups) out.entries.emplace(tail_set, Family(f.k(), std::move(members)));
  return out;
}

Family restricted_shadow_of(KSet member, KSet keep, int j) {
  const int k = member.size();
  require(j > 0 && j <= k, "restricted_shadow_of: need 0 < j <= |member|");
  const KSet free = member - keep;
  std::vector<KSet> sets;
  for_each_subset_of_size(free, free.size() - j, [&](KSet s) { sets.push_back(s | (member & keep)); });
  return Family(k - j, std::move(sets));
}

namespace {

void append(std::vector<KSet>& out, const Family& f) { out.insert(out.end(), f.begin(), f.end()); }

}  // namespace

Family tail_restricted_shadow(const Family& f, int t, int j) {
  require(j > 0 && j <= t, "tail_restricted_shadow: need 0 < j <= t");
  require(j < f.k(), "tail_restricted_shadow: need j < k");
  const int w = width(f, t);
  std::vector<KSet> out;
  for (KSet m : f) append(out, restricted_shadow_of(m, tail(m, t, w), j));
  return Family(f.k() - j, std::move(out));
}

std::map<KSet, Family> per_tail_restricted_shadows(const TailPartition& partition, int k, int j) {
  require(j > 0 && j <= partition.t && j < k, "per_tail_restricted_shadows: need 0 < j <= t, j < k");
  std::map<KSet, Family> out;
  for (const auto& [tail_set, members] : partition.entries) {
    std::vector<KSet> sets;
    for (KSet m : members) append(sets, restricted_shadow_of(m, tail_set, j));
    out.emplace(tail_set, Family(k - j, std::move(sets)));
  }
  return out;
}

Family prefix_restricted_shadow(const Family& f, int m, int j) {
  require(j > 0 && j < f.k(), "prefix_restricted_shadow: need 0 < j < k");
  require(m >= 0, "prefix_restricted_shadow: need m >= 0");
  std::vector<KSet> out;
  for (KSet member : f) {
    if (prefix_intersection_size(member, m) < j) continue;
    append(out, restricted_shadow_of(member, member - KSet::prefix(m), j));
  }
  return Family(f.k() - j, std::move(out));
}

bool is_t_star(const Family& f, int t) {
  require(t >= 1, "is_t_star: need t >= 1");
  if (f.empty()) return true;
  return f.member_intersection().size() >= t;
}

std::optional<KSet> find_semistar_center(const Family& f, int t) {
  require(t >= 1, "find_semistar_center: need t >= 1");
  const KSet universe = f.member_union() | KSet::prefix(t + 1);
  std::optional<KSet> found;
  for_each_subset_of_size(universe, t + 1, [&](KSet d) {
    if (found) return;
    if (std::all_of(f.begin(), f.end(), [&](KSet m) { return m.intersection_size(d) >= t; })) found = d;
  });
  return found;
}

bool is_semistar(const Family& f, int t) { return find_semistar_center(f, t).has_value(); }

std::size_t BaseDecomposition::count(int ell) const {
  const auto it = levels.find(ell);
  return it == levels.end() ? 0 : it->second.size();
}

BaseDecomposition base_decomposition(const Family& f, int k, int t) {
  require(f.empty() || f.k() == k, "base_decomposition: family members are not k-sets");
  require(t >= 1 && t < k, "base_decomposition: need 1 <= t < k");
  require(2 * k - t <= kMaxGround, "base_decomposition: 2k - t exceeds the ground limit");
  BaseDecomposition out;
  out.k = k;
  out.t = t;
  const KSet window = KSet::prefix(2 * k - t);
  std::vector<KSet> traces;
  traces.reserve(f.size());
  for (KSet m : f) traces.push_back(m & window);
  out.base = SetSystem(std::move(traces));
  for (int ell = 0; ell <= k; ++ell) {
    Family level = out.base.level(ell);
    if (!level.empty()) out.levels.emplace(ell, std::move(level));
  }
  return out;
}

NextLevelReport classify_next_level(const Family& f, int k, int t) {
  require(is_shifted(f), "classify_next_level: family is not shifted");
  require(is_t_intersecting(f, t), "classify_next_level: family is not t-intersecting");
  const BaseDecomposition base = base_decomposition(f, k, t);
  const auto level_it = base.levels.find(t + 1);
  const Family level = level_it == base.levels.end() ? Family(t + 1) : level_it->second;

  NextLevelReport report;
  report.s = level.size();
  const KSet a3 = KSet::prefix(t + 2).without(t);
  report.a3_in_base = level.contains(a3);

  std::vector<KSet> expected;
  for (int x = t + 1; x <= t + static_cast<int>(report.s); ++x) expected.push_back(KSet::prefix(t).with(x));
  report.consecutive = (level == Family(t + 1, std::move(expected)));

  if (report.a3_in_base) {
    report.contained_in_first_frankl =
        std::all_of(f.begin(), f.end(), [&](KSet m) { return meets_prefix_condition(m, t, 1); });
    ensure(report.contained_in_first_frankl,
           "classify_next_level: A3 is a trace but the family leaves the first Frankl family");
  } else {
    ensure(report.consecutive, "classify_next_level: (t+1)-level of the base is not consecutive");
  }
  return report;
}

}  // namespace shadowlab
