#include "digifrac/rational.hpp"

#include <ostream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "digifrac/errors.hpp"

namespace digifrac {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// cpp_int reads a leading 0 as an octal prefix, so strip redundant zeros.
Integer decimal_integer(std::string_view s) {
  const bool negative = s.front() == '-';
  if (negative) s.remove_prefix(1);
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational::Rational(Integer value) : num_(std::move(value)), den_(1) {}

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_decimal_integer(num_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer num = decimal_integer(num_text);
  if (slash == std::string_view::npos) return Rational(std::move(num));
  const auto den_text = text.substr(slash + 1);
  if (!is_decimal_integer(den_text) || den_text.front() == '-') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer den = decimal_integer(den_text);
  if (den == 0) throw ParseError("rational with zero denominator '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::to_double() const {
  using boost::multiprecision::cpp_bin_float_double;
  return static_cast<double>(cpp_bin_float_double(num_) / cpp_bin_float_double(den_));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Integer lhs = a.num_ * b.den_;
  const Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer Rational::floor() const {
  Integer q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) --q;
  return q;
}

Integer Rational::ceil() const {
  Integer q = num_ / den_;
  if (num_ > 0 && q * den_ != num_) ++q;
  return q;
}

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(boost::multiprecision::pow(base.numerator(), exponent),
                  boost::multiprecision::pow(base.denominator(), exponent));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace digifrac
