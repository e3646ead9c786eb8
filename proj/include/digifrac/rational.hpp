#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace digifrac {

using Integer = boost::multiprecision::cpp_int;

/// Exact fraction kept in lowest terms with a positive denominator.
/// Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(Integer value);  // NOLINT: implicit by intent, integers are rationals
  Rational(long long value) : Rational(Integer(value)) {}
  Rational(int value) : Rational(Integer(value)) {}
  Rational(Integer numerator, Integer denominator);

  /// Accepts "p/q" or "p" with an optional leading minus on p.
  static Rational parse(std::string_view text);

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }
  double to_double() const;

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Largest integer not above the value.
  Integer floor() const;
  /// Smallest integer not below the value.
  Integer ceil() const;

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace digifrac
