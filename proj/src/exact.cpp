#include "shadowlab/exact.hpp"

#include <ostream>

#include "shadowlab/errors.hpp"

namespace shadowlab {

BigInt binomial(std::int64_t a, std::int64_t b) {
  require(a >= 0, "binomial: top argument must be non-negative, got " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: result is C(a - b + i, i) here
  }
  return result;
}

ExactRatio::ExactRatio(BigInt numerator, BigInt denominator) {
  require(denominator != 0, "ExactRatio: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = Rational(std::move(numerator), std::move(denominator));
}

BigInt ExactRatio::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt ExactRatio::denominator() const { return boost::multiprecision::denominator(value_); }

bool ExactRatio::is_zero() const { return value_ == 0; }
int ExactRatio::sign() const { return value_.sign(); }

ExactRatio ExactRatio::reciprocal() const {
  require(!is_zero(), "ExactRatio: reciprocal of zero");
  return ExactRatio(Rational(1) / value_);
}

std::string ExactRatio::to_string() const {
  const BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

double ExactRatio::to_double() const { return value_.convert_to<double>(); }

ExactRatio& ExactRatio::operator+=(const ExactRatio& other) {
  value_ += other.value_;
  return *this;
}

ExactRatio& ExactRatio::operator-=(const ExactRatio& other) {
  value_ -= other.value_;
  return *this;
}

ExactRatio& ExactRatio::operator*=(const ExactRatio& other) {
  value_ *= other.value_;
  return *this;
}

ExactRatio& ExactRatio::operator/=(const ExactRatio& other) {
  require(!other.is_zero(), "ExactRatio: division by zero");
  value_ /= other.value_;
  return *this;
}

ExactRatio ExactRatio::operator-() const { return ExactRatio(Rational(-value_)); }

std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactRatio& r) { return os << r.to_string(); }

}  // namespace shadowlab
