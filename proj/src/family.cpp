#include "shadowlab/family.hpp"

#include <algorithm>

#include "shadowlab/errors.hpp"

namespace shadowlab {

namespace {

void sort_unique(std::vector<KSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Family::Family(int k) : k_(k) {
  require(k >= 0 && k <= kMaxGround, "Family: member size out of range");
}

Family::Family(int k, std::vector<KSet> members) : Family(k) {
  for (KSet m : members) {
    require(m.size() == k, "Family: member " + m.to_string() + " does not have " + std::to_string(k) +
                               " elements");
  }
  members_ = std::move(members);
  sort_unique(members_);
}

Family::Family(int k, std::initializer_list<KSet> members) : Family(k, std::vector<KSet>(members)) {}

bool Family::contains(KSet set) const { return std::binary_search(members_.begin(), members_.end(), set); }

KSet Family::member_union() const {
  KSet u;
  for (KSet m : members_) u = u | m;
  return u;
}

KSet Family::member_intersection() const {
  if (members_.empty()) return KSet{};
  KSet x = members_.front();
  for (KSet m : members_) x = x & m;
  return x;
}

std::string Family::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ", ";
    out += members_[i].to_string();
  }
  return out + "}";
}

Family family_union(const Family& a, const Family& b) {
  require(a.k() == b.k() || a.empty() || b.empty(), "family_union: different member sizes");
  std::vector<KSet> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Family(a.empty() ? b.k() : a.k(), std::move(out));
}

Family family_difference(const Family& a, const Family& b) {
  std::vector<KSet> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Family(a.k(), std::move(out));
}

bool is_subfamily(const Family& a, const Family& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Family enumerate_ksubsets(int n, int k) {
  if (n > kMaxGround) {
    throw CapacityError("ground set of size " + std::to_string(n) + " exceeds the " +
                        std::to_string(kMaxGround) + "-element limit");
  }
  require(k >= 0 && k <= n, "enumerate_ksubsets: need 0 <= k <= n");
  std::vector<KSet> out;
  for_each_subset_of_size(KSet::prefix(n), k, [&](KSet s) { out.push_back(s); });
  return Family(k, std::move(out));
}

SetSystem::SetSystem(std::vector<KSet> members) : members_(std::move(members)) { sort_unique(members_); }

bool SetSystem::contains(KSet set) const { return std::binary_search(members_.begin(), members_.end(), set); }

Family SetSystem::level(int ell) const {
  std::vector<KSet> out;
  for (KSet m : members_) {
    if (m.size() == ell) out.push_back(m);
  }
  return Family(ell, std::move(out));
}

int SetSystem::max_level() const {
  int best = -1;
  for (KSet m : members_) best = std::max(best, m.size());
  return best;
}

}  // namespace shadowlab
