#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shadowlab {

using BigInt = boost::multiprecision::cpp_int;

// C(a, b). Zero when b < 0 or b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

// Reduced rational with arbitrary-precision parts. The denominator is always
// positive, so equal values have equal representations.
class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(BigInt numerator, BigInt denominator = 1);  // NOLINT(google-explicit-constructor)
  ExactRatio(std::int64_t value) : ExactRatio(BigInt(value)) {}  // NOLINT
  ExactRatio(int value) : ExactRatio(BigInt(value)) {}           // NOLINT

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const;
  int sign() const;
  ExactRatio reciprocal() const;

  // "p/q", or just "p" when the value is an integer.
  std::string to_string() const;
  // Approximation for display only.
  double to_double() const;

  ExactRatio& operator+=(const ExactRatio& other);
  ExactRatio& operator-=(const ExactRatio& other);
  ExactRatio& operator*=(const ExactRatio& other);
  ExactRatio& operator/=(const ExactRatio& other);

  friend ExactRatio operator+(ExactRatio a, const ExactRatio& b) { return a += b; }
  friend ExactRatio operator-(ExactRatio a, const ExactRatio& b) { return a -= b; }
  friend ExactRatio operator*(ExactRatio a, const ExactRatio& b) { return a *= b; }
  friend ExactRatio operator/(ExactRatio a, const ExactRatio& b) { return a /= b; }
  ExactRatio operator-() const;

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b);

 private:
  using Rational = boost::multiprecision::cpp_rational;
  explicit ExactRatio(Rational value) : value_(std::move(value)) {}

  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRatio& r);

}  // namespace shadowlab
