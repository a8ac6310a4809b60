#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace shadowlab {

// Largest ground set a KSet can describe: elements are 1..kMaxGround.
inline constexpr int kMaxGround = 64;

// A subset of [kMaxGround], stored as one machine word. Element i lives in
// bit i - 1, so the numeric order of the words is the canonical member order
// used by every container in the library.
class KSet {
 public:
  constexpr KSet() = default;
  constexpr explicit KSet(std::uint64_t bits) : bits_(bits) {}

  // Throws ContractViolation for elements outside [1, kMaxGround] or repeats.
  static KSet of(std::initializer_list<int> elements);
  static KSet of(std::span<const int> elements);

  // [m] = {1, ..., m}; m is clamped to [0, kMaxGround].
  static constexpr KSet prefix(int m) {
    if (m <= 0) return KSet{};
    if (m >= kMaxGround) return KSet{~std::uint64_t{0}};
    return KSet{(std::uint64_t{1} << m) - 1};
  }

  // [lo, hi], empty when lo > hi.
  static constexpr KSet interval(int lo, int hi) {
    if (lo < 1) lo = 1;
    if (hi < lo) return KSet{};
    return KSet{prefix(hi).bits_ & ~prefix(lo - 1).bits_};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int element) const {
    return element >= 1 && element <= kMaxGround && ((bits_ >> (element - 1)) & 1U) != 0;
  }

  // Largest / smallest element, 0 for the empty set.
  constexpr int max_element() const { return bits_ == 0 ? 0 : kMaxGround - std::countl_zero(bits_); }
  constexpr int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  KSet with(int element) const;
  KSet without(int element) const;

  constexpr bool subset_of(KSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr int intersection_size(KSet other) const { return std::popcount(bits_ & other.bits_); }

  friend constexpr KSet operator&(KSet a, KSet b) { return KSet{a.bits_ & b.bits_}; }
  friend constexpr KSet operator|(KSet a, KSet b) { return KSet{a.bits_ | b.bits_}; }
  friend constexpr KSet operator-(KSet a, KSet b) { return KSet{a.bits_ & ~b.bits_}; }

  friend constexpr bool operator==(KSet, KSet) = default;
  friend constexpr auto operator<=>(KSet a, KSet b) { return a.bits_ <=> b.bits_; }

  // Sorted ascending; this is the (a_1 < ... < a_k) tuple view.
  std::vector<int> elements() const;

  // "{1,2,5}"
  std::string to_string() const;
  // Space separated, as in the family file format: "1 2 5".
  std::string to_line() const;
  // "0x13"
  std::string to_hex() const;

 private:
  std::uint64_t bits_ = 0;
};

// |f ∩ [m]|. Requires m >= 0.
int prefix_intersection_size(KSet f, int m);

// Componentwise comparison of the sorted tuples: a_i <= b_i for all i.
// Throws ContractViolation when |a| != |b|.
bool shifting_order_leq(KSet a, KSet b);

// Calls fn(KSet) for every sub-set of `set` with exactly `size` elements,
// in increasing numeric order.
template <class Fn>
void for_each_subset_of_size(KSet set, int size, Fn&& fn) {
  const int k = set.size();
  if (size < 0 || size > k) return;
  std::uint64_t positions[kMaxGround];
  {
    std::uint64_t rest = set.bits();
    for (int i = 0; i < k; ++i) {
      positions[i] = rest & (~rest + 1);
      rest &= rest - 1;
    }
  }
  if (size == 0) {
    fn(KSet{});
    return;
  }
  // Gosper's hack over index masks of length k.
  std::uint64_t index = (size == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  const std::uint64_t last = index << (k - size);
  while (true) {
    std::uint64_t bits = 0;
    for (std::uint64_t rest = index; rest != 0; rest &= rest - 1) {
      bits |= positions[std::countr_zero(rest)];
    }
    fn(KSet{bits});
    if (index == last) break;
    const std::uint64_t low = index & (~index + 1);
    const std::uint64_t ripple = index + low;
    index = ripple | (((index ^ ripple) >> 2) / low);
  }
}

}  // namespace shadowlab
