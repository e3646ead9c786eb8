// Numeral text grammar:
//
//   numeral  := '[' body ']' '@' radix 'b' balance
//   body     := int_part ( ' . ' frac_part )?
//   int_part := digit ( ' ' digit )*
//   digit    := '-'? [0-9]+            (also accepted on input: '(' digit ')')
//
// Printing emits the integer part from max(highest exponent, 0) down to
// exponent 0, then " . " and the fractional digits down to the lowest
// non-zero exponent. Zero prints as "[0]@<m>b<b>". The parser accepts any
// run of blanks between tokens and redundant leading/trailing zeros; the
// printed form is the canonical one.

#include <charconv>
#include <sstream>

#include "digifrac/errors.hpp"
#include "digifrac/radix.hpp"

namespace digifrac {

std::string to_string(const DigitString& d) {
  std::ostringstream os;
  os << '[';
  if (d.is_zero()) {
    os << '0';
  } else {
    const auto top = std::max<DigitString::Exponent>(*d.highest_exponent(), 0);
    const auto bottom = std::min<DigitString::Exponent>(*d.lowest_exponent(), 0);
    for (auto e = top; e >= bottom; --e) {
      if (e != top) os << ' ';
      os << d.digit(e);
      if (e == 0 && bottom < 0) os << " .";
    }
  }
  os << "]@" << d.system().radix() << 'b' << d.system().balance();
  return os.str();
}

namespace {

[[noreturn]] void malformed(std::string_view text, std::string_view why) {
  throw ParseError("malformed numeral '" + std::string(text) + "': " + std::string(why));
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '-' && s.size() == 1) return false;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

DigitString parse_numeral(std::string_view text) {
  const auto open = text.find('[');
  const auto close = text.find(']');
  if (open != 0 || close == std::string_view::npos) malformed(text, "expected '[...]'");
  const auto suffix = text.substr(close + 1);
  if (suffix.size() < 4 || suffix.front() != '@') malformed(text, "expected '@<m>b<b>' suffix");
  const auto bpos = suffix.find('b');
  if (bpos == std::string_view::npos) malformed(text, "expected '@<m>b<b>' suffix");
  int radix = 0;
  int balance = 0;
  if (!parse_int(suffix.substr(1, bpos - 1), radix) || !parse_int(suffix.substr(bpos + 1), balance)) {
    malformed(text, "bad radix or balance");
  }
  const DigitSystem system(radix, balance);

  std::vector<int> int_part;
  std::vector<int> frac_part;
  bool seen_point = false;
  std::istringstream body{std::string(text.substr(1, close - 1))};
  std::string tok;
  while (body >> tok) {
    if (tok == ".") {
      if (seen_point) malformed(text, "more than one radix point");
      seen_point = true;
      continue;
    }
    std::string_view digit_text = tok;
    if (digit_text.size() >= 3 && digit_text.front() == '(' && digit_text.back() == ')') {
      digit_text = digit_text.substr(1, digit_text.size() - 2);
    }
    int d = 0;
    if (!parse_int(digit_text, d)) malformed(text, "bad digit '" + tok + "'");
    if (!system.is_digit(d)) {
      throw DomainError("digit " + std::to_string(d) + " outside alphabet of base " +
                        std::to_string(radix) + " balance " + std::to_string(balance));
    }
    (seen_point ? frac_part : int_part).push_back(d);
  }
  if (int_part.empty()) malformed(text, "missing integer part");
  if (seen_point && frac_part.empty()) malformed(text, "missing digits after radix point");

  std::vector<int> all = int_part;
  all.insert(all.end(), frac_part.begin(), frac_part.end());
  return DigitString::from_positional(system, all, -static_cast<int>(frac_part.size()));
}

}  // namespace digifrac
