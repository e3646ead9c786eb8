#include <random>

#include "digifrac/errors.hpp"
#include "digifrac/radix.hpp"
#include "doctest.h"

using namespace digifrac;

TEST_CASE("canonical printing") {
  CHECK(to_string(int_to_digits(14, DigitSystem(3, 1))) == "[1 -1 -1 -1]@3b1");
  CHECK(to_string(int_to_digits(-14, DigitSystem(3, 1))) == "[-1 1 1 1]@3b1");
  CHECK(to_string(DigitString::from_positional(DigitSystem(3, 0), {1, 0, 2}, -1)) == "[1 0 . 2]@3b0");
  CHECK(to_string(DigitString(DigitSystem(2, 0))) == "[0]@2b0");
  CHECK(to_string(DigitString::from_positional(DigitSystem(2, 0), {1}, -2)) == "[0 . 0 1]@2b0");
  CHECK(to_string(DigitString::from_positional(DigitSystem(2, 0), {1}, 2)) == "[1 0 0]@2b0");
  CHECK(to_string(DigitString::from_positional(DigitSystem(12, 0), {11, 10}, 0)) == "[11 10]@12b0");
}

TEST_CASE("parsing") {
  const DigitSystem q(5, 2);
  CHECK(parse_numeral("[2 . -1 -2]@5b2") == DigitString::from_positional(q, {2, -1, -2}, -2));
  CHECK(parse_numeral("[2 . (-1) (-2)]@5b2") == DigitString::from_positional(q, {2, -1, -2}, -2));
  CHECK(parse_numeral("[0 0 1 . 0]@2b0") == DigitString::from_positional(DigitSystem(2, 0), {1}, 0));
  CHECK(parse_numeral("[0]@7b0").is_zero());

  for (const char* bad : {"", "[1 0]", "1 0@2b0", "[1 . ]@2b0", "[ . 1]@2b0", "[1 . 1 . 1]@2b0",
                          "[1 x]@2b0", "[1]@2", "[1]@2bx", "[10.2]@3b0", "[1]@b0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_numeral(bad), ParseError);
  }
  CHECK_THROWS_AS(parse_numeral("[3]@3b0"), DomainError);
  CHECK_THROWS_AS(parse_numeral("[-2]@3b1"), DomainError);
  CHECK_THROWS_AS(parse_numeral("[1]@2b1"), DomainError);
}

TEST_CASE("print/parse round trip on random numerals") {
  std::mt19937_64 rng(3);
  for (const auto& sys : {DigitSystem(2, 0), DigitSystem(3, 1), DigitSystem(5, 2), DigitSystem(16, 0),
                          DigitSystem(16, 8)}) {
    std::uniform_int_distribution<int> digit(sys.min_digit(), sys.max_digit());
    std::uniform_int_distribution<int> lowest(-5, 3);
    std::uniform_int_distribution<int> len(0, 8);
    for (int t = 0; t < 500; ++t) {
      std::vector<int> digits(static_cast<std::size_t>(len(rng)));
      for (auto& d : digits) d = digit(rng);
      const auto x = DigitString::from_positional(sys, digits, lowest(rng));
      const auto text = to_string(x);
      REQUIRE(parse_numeral(text) == x);
      REQUIRE(to_string(parse_numeral(text)) == text);
    }
  }
}
