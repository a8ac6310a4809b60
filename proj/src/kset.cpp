#include "shadowlab/kset.hpp"

#include <sstream>

#include "shadowlab/errors.hpp"

namespace shadowlab {

namespace {

void check_element(int element) {
  require(element >= 1 && element <= kMaxGround,
          "element " + std::to_string(element) + " outside [1, " + std::to_string(kMaxGround) + "]");
}

}  // namespace

KSet KSet::of(std::initializer_list<int> elements) {
  return of(std::span<const int>(elements.begin(), elements.size()));
}

KSet KSet::of(std::span<const int> elements) {
  KSet result;
  for (int e : elements) {
    check_element(e);
    require(!result.contains(e), "repeated element " + std::to_string(e));
    result = result.with(e);
  }
  return result;
}

KSet KSet::with(int element) const {
  check_element(element);
  return KSet{bits_ | (std::uint64_t{1} << (element - 1))};
}

KSet KSet::without(int element) const {
  check_element(element);
  return KSet{bits_ & ~(std::uint64_t{1} << (element - 1))};
}

std::vector<int> KSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string KSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string KSet::to_line() const {
  std::string out;
  for (int e : elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

std::string KSet::to_hex() const {
  std::ostringstream os;
  os << "0x" << std::hex << bits_;
  return os.str();
}

int prefix_intersection_size(KSet f, int m) {
  require(m >= 0, "prefix_intersection_size: negative prefix length");
  return (f & KSet::prefix(m)).size();
}

bool shifting_order_leq(KSet a, KSet b) {
  require(a.size() == b.size(), "shifting_order_leq: sets of different cardinality " +
                                    a.to_string() + " and " + b.to_string());
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0) {
    if (std::countr_zero(x) > std::countr_zero(y)) return false;
    x &= x - 1;
    y &= y - 1;
  }
  return true;
}

}  // namespace shadowlab
