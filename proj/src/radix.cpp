#include "digifrac/radix.hpp"

#include <algorithm>
#include <string>

#include "digifrac/errors.hpp"

namespace digifrac {

bool DigitSystem::is_legal(int radix, int balance) noexcept {
  if (radix < 2) return false;
  if (balance == 0) return true;
  return radix > 2 && balance >= 1 && balance <= radix / 2;
}

DigitSystem::DigitSystem(int radix, int balance) : m_(radix), b_(balance) {
  if (!is_legal(radix, balance)) {
    throw DomainError("illegal digit system (m=" + std::to_string(radix) +
                      ", b=" + std::to_string(balance) +
                      "): need m >= 2 and b = 0, or m > 2 and 1 <= b <= m/2");
  }
}

int DigitSystem::digit_congruent_to(long long v) const noexcept {
  long long r = v % m_;
  if (r < 0) r += m_;
  if (r > max_digit()) r -= m_;
  return static_cast<int>(r);
}

ValueInterval DigitSystem::value_interval() const {
  return {Rational(Integer(-b_), Integer(m_ - 1)), Rational(Integer(m_ - 1 - b_), Integer(m_ - 1))};
}

DigitString::DigitString(DigitSystem system, const std::map<Exponent, Digit>& digits)
    : system_(system) {
  for (const auto& [e, d] : digits) {
    if (!system_.is_digit(d)) {
      throw DomainError("digit " + std::to_string(d) + " outside alphabet [" +
                        std::to_string(system_.min_digit()) + ", " +
                        std::to_string(system_.max_digit()) + "]");
    }
    if (d != 0) digits_.emplace(e, d);
  }
}

DigitString DigitString::from_positional(DigitSystem system, const std::vector<Digit>& digits,
                                         Exponent lowest_exponent) {
  std::map<Exponent, Digit> m;
  Exponent e = lowest_exponent;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, ++e) m.emplace(e, *it);
  return DigitString(system, m);
}

DigitString::Digit DigitString::digit(Exponent e) const {
  const auto it = digits_.find(e);
  return it == digits_.end() ? 0 : it->second;
}

std::optional<DigitString::Exponent> DigitString::highest_exponent() const {
  if (digits_.empty()) return std::nullopt;
  return digits_.rbegin()->first;
}

std::optional<DigitString::Exponent> DigitString::lowest_exponent() const {
  if (digits_.empty()) return std::nullopt;
  return digits_.begin()->first;
}

DigitString int_to_digits(const Integer& n, DigitSystem system) {
  if (system.balance() == 0 && n < 0) {
    throw DomainError("standard base cannot represent negative integer " + n.str());
  }
  const Integer m = system.radix();
  std::map<DigitString::Exponent, DigitString::Digit> digits;
  Integer rest = n;
  DigitString::Exponent e = 0;
  while (rest != 0) {
    Integer r = rest % m;  // sign follows the dividend
    if (r < 0) r += m;
    int d = static_cast<int>(r);
    if (d > system.max_digit()) d -= system.radix();
    digits.emplace(e++, d);
    rest = (rest - d) / m;
  }
  return DigitString(system, digits);
}

Rational digits_to_rational(const DigitString& d) {
  if (d.is_zero()) return {};
  const auto lo = *d.lowest_exponent();
  // Horner over integers, then a single division by m^(-lo) when lo < 0.
  const Integer m = d.system().radix();
  Integer acc = 0;
  for (auto e = *d.highest_exponent(); e >= lo; --e) acc = acc * m + d.digit(e);
  if (lo >= 0) return Rational(acc * boost::multiprecision::pow(m, static_cast<unsigned>(lo)));
  return Rational(acc, boost::multiprecision::pow(m, static_cast<unsigned>(-lo)));
}

namespace {

void require_same_system(const DigitString& x, const DigitString& y) {
  if (!(x.system() == y.system())) throw DomainError("numerals belong to different digit systems");
}

}  // namespace

DigitString add(const DigitString& x, const DigitString& y) {
  require_same_system(x, y);
  const DigitSystem sys = x.system();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;

  const auto lo = std::min(*x.lowest_exponent(), *y.lowest_exponent());
  const auto hi = std::max(*x.highest_exponent(), *y.highest_exponent());
  std::map<DigitString::Exponent, DigitString::Digit> out;
  long long carry = 0;
  for (auto e = lo; e <= hi || carry != 0; ++e) {
    const long long raw = static_cast<long long>(x.digit(e)) + y.digit(e) + carry;
    const int d = sys.digit_congruent_to(raw);
    carry = (raw - d) / sys.radix();
    if (d != 0) out.emplace(e, d);
  }
  // Standard-base operands are non-negative, so the sum is too.
  return DigitString(sys, out);
}

bool carry_free(const DigitString& x, const DigitString& y) {
  require_same_system(x, y);
  const DigitSystem& sys = x.system();
  auto ok = [&](DigitString::Exponent e) {
    return sys.is_digit(static_cast<long long>(x.digit(e)) + y.digit(e));
  };
  for (const auto& [e, _] : x.digits()) {
    if (!ok(e)) return false;
  }
  for (const auto& [e, _] : y.digits()) {
    if (!ok(e)) return false;
  }
  return true;
}

std::vector<DigitChoice> frac_digit_choices(const Rational& r, DigitSystem system) {
  const ValueInterval iv = system.value_interval();
  if (!iv.contains(r)) {
    throw DomainError("value " + r.str() + " outside the digit interval [" + iv.lo.str() + ", " +
                      iv.hi.str() + "]");
  }
  const Rational scaled = r * Rational(system.radix());
  // m*r - d in [lo, hi]  <=>  d in [m*r - hi, m*r - lo], an interval of width 1.
  const Integer first = (scaled - iv.hi).ceil();
  const Integer last = (scaled - iv.lo).floor();
  std::vector<DigitChoice> out;
  for (Integer d = first; d <= last; ++d) {
    const auto digit = static_cast<long long>(d);
    if (!system.is_digit(digit)) continue;
    out.push_back({static_cast<int>(digit), scaled - Rational(d)});
  }
  return out;
}

std::vector<DigitString> expansions(const Rational& r, DigitSystem system, int depth) {
  if (depth < 0) throw DomainError("expansion depth must be non-negative");
  frac_digit_choices(r, system);  // validates r

  // Prefix tree: each node stores its last digit and a link to its parent.
  struct Node {
    std::ptrdiff_t parent;
    int digit;
    Rational remainder;
  };
  std::vector<Node> nodes{{-1, 0, r}};
  std::vector<std::ptrdiff_t> level{0};
  for (int step = 0; step < depth; ++step) {
    std::vector<std::ptrdiff_t> next;
    for (const auto id : level) {
      // Distinct parents and distinct digits per parent: prefixes never repeat.
      for (auto& choice : frac_digit_choices(nodes[static_cast<std::size_t>(id)].remainder, system)) {
        next.push_back(static_cast<std::ptrdiff_t>(nodes.size()));
        nodes.push_back({id, choice.digit, std::move(choice.remainder)});
      }
    }
    level = std::move(next);
  }

  std::vector<DigitString> out;
  out.reserve(level.size());
  for (const auto leaf : level) {
    std::map<DigitString::Exponent, DigitString::Digit> digits;
    DigitString::Exponent e = -depth;
    for (auto id = leaf; nodes[static_cast<std::size_t>(id)].parent >= 0;
         id = nodes[static_cast<std::size_t>(id)].parent, ++e) {
      digits.emplace(e, nodes[static_cast<std::size_t>(id)].digit);
    }
    out.emplace_back(system, digits);
  }
  return out;
}

}  // namespace digifrac
