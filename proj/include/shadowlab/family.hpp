#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "shadowlab/kset.hpp"

namespace shadowlab {

// A uniform family: distinct k-sets, kept sorted by numeric bit value.
class Family {
 public:
  using const_iterator = std::vector<KSet>::const_iterator;

  Family() = default;
  explicit Family(int k);
  // Sorts and drops duplicates. Every member must have exactly k elements.
  Family(int k, std::vector<KSet> members);
  Family(int k, std::initializer_list<KSet> members);

  int k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(KSet set) const;
  std::span<const KSet> members() const { return members_; }
  const KSet& operator[](std::size_t i) const { return members_[i]; }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  // Union / intersection of all members. The intersection of the empty
  // family is the empty set.
  KSet member_union() const;
  KSet member_intersection() const;
  // Largest element used by any member, 0 when empty.
  int max_element() const { return member_union().max_element(); }

  template <class Pred>
  Family filter(Pred&& pred) const {
    Family out(k_);
    for (KSet m : members_) {
      if (pred(m)) out.members_.push_back(m);
    }
    return out;
  }

  std::string to_string() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int k_ = 0;
  std::vector<KSet> members_;
};

Family family_union(const Family& a, const Family& b);
Family family_difference(const Family& a, const Family& b);
bool is_subfamily(const Family& a, const Family& b);

// All k-subsets of [n]. Throws CapacityError when n > kMaxGround.
Family enumerate_ksubsets(int n, int k);

// Non-uniform collection of distinct sets.
class SetSystem {
 public:
  SetSystem() = default;
  explicit SetSystem(std::vector<KSet> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(KSet set) const;
  std::span<const KSet> members() const { return members_; }

  // The members of cardinality ell, as a uniform family.
  Family level(int ell) const;
  // Largest member cardinality, -1 when empty.
  int max_level() const;

 private:
  std::vector<KSet> members_;
};

}  // namespace shadowlab
