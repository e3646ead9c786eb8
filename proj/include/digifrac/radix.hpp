#pragma once

// Positional numerals in base m over the contiguous digit alphabet
// [-b, m-1-b]. b = 0 is the standard base; 1 <= b <= m/2 (m > 2) is the
// b-balanced base, e.g. balanced ternary is (3, 1).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digifrac/rational.hpp"

namespace digifrac {

/// Closed range of values taken by pure-fractional numerals
/// [0.d1 d2 ...] of a system: [-b/(m-1), (m-1-b)/(m-1)]. Width is always 1.
struct ValueInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
};

class DigitSystem {
 public:
  /// Throws DomainError unless m >= 2 and either b == 0 or
  /// (m > 2 and 1 <= b <= m/2).
  DigitSystem(int radix, int balance);

  static bool is_legal(int radix, int balance) noexcept;

  int radix() const noexcept { return m_; }
  int balance() const noexcept { return b_; }
  int min_digit() const noexcept { return -b_; }
  int max_digit() const noexcept { return m_ - 1 - b_; }
  bool is_digit(long long d) const noexcept { return d >= min_digit() && d <= max_digit(); }

  /// The alphabet member congruent to v modulo m.
  int digit_congruent_to(long long v) const noexcept;

  ValueInterval value_interval() const;

  friend bool operator==(const DigitSystem&, const DigitSystem&) = default;

 private:
  int m_;
  int b_;
};

/// Finite signed-digit numeral: exponent -> digit, zeros never stored.
class DigitString {
 public:
  using Exponent = std::int32_t;
  using Digit = std::int32_t;

  explicit DigitString(DigitSystem system) : system_(system) {}
  /// Throws DomainError if a digit falls outside the alphabet.
  DigitString(DigitSystem system, const std::map<Exponent, Digit>& digits);

  /// Digits listed most significant first; the last one sits at
  /// `lowest_exponent`.
  static DigitString from_positional(DigitSystem system, const std::vector<Digit>& digits,
                                     Exponent lowest_exponent);

  const DigitSystem& system() const noexcept { return system_; }
  const std::map<Exponent, Digit>& digits() const noexcept { return digits_; }
  Digit digit(Exponent e) const;
  bool is_zero() const noexcept { return digits_.empty(); }
  std::optional<Exponent> highest_exponent() const;
  std::optional<Exponent> lowest_exponent() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  DigitSystem system_;
  std::map<Exponent, Digit> digits_;
};

/// Integer to numeral by repeated division, remainder normalized to
/// [0, m-1] then shifted into the alphabet. b == 0 requires n >= 0.
DigitString int_to_digits(const Integer& n, DigitSystem system);

Rational digits_to_rational(const DigitString& d);

/// Digit-by-digit addition from the lowest exponent up with a carry in
/// {-1, 0, 1}. Throws DomainError on mismatched systems.
DigitString add(const DigitString& x, const DigitString& y);

/// True iff every positionwise digit sum stays inside the alphabet, so the
/// sum can be formed without any carry.
bool carry_free(const DigitString& x, const DigitString& y);

struct DigitChoice {
  int digit;
  Rational remainder;

  friend bool operator==(const DigitChoice&, const DigitChoice&) = default;
};

/// One step of fractional digit extraction: the alphabet digits d with
/// m*r - d back inside the value interval, ascending. One or two entries;
/// two only when a remainder lands on an interval endpoint.
std::vector<DigitChoice> frac_digit_choices(const Rational& r, DigitSystem system);

/// All distinct length-`depth` prefixes of fractional expansions of r
/// (exponents -1 .. -depth), ordered lexicographically by digit value.
std::vector<DigitString> expansions(const Rational& r, DigitSystem system, int depth);

// Numeral text format, e.g. "[1 -1 -1 -1]@3b1" or "[1 0 . 2]@3b0".
std::string to_string(const DigitString& d);
DigitString parse_numeral(std::string_view text);

}  // namespace digifrac
