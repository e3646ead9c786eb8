#include <cmath>
#include <numeric>

#include "digifrac/dimension.hpp"
#include "digifrac/errors.hpp"
#include "doctest.h"

using namespace digifrac;

TEST_CASE("closed-form dimensions") {
  CHECK(closed_form_dim(2, 0) == doctest::Approx(1.584963).epsilon(1e-6));
  CHECK(closed_form_dim(2, 0) == doctest::Approx(std::log(3.0) / std::log(2.0)).epsilon(1e-15));
  CHECK(closed_form_dim(3, 0) == doctest::Approx(1.630930).epsilon(1e-6));
  CHECK(closed_form_dim(3, 1) == doctest::Approx(1.771244).epsilon(1e-6));
  CHECK_THROWS_AS(closed_form_dim(2, 1), DomainError);
}

TEST_CASE("box-count estimate examples") {
  const auto sierp = box_count_estimate(DigitSystem(2, 0), 5);
  CHECK(sierp.box_count == 243);
  CHECK(sierp.estimate == doctest::Approx(std::log(3.0) / std::log(2.0)).epsilon(1e-12));

  const auto hex = box_count_estimate(DigitSystem(3, 1), 3);
  CHECK(hex.box_count == 343);
  CHECK(hex.estimate == doctest::Approx(std::log(7.0) / std::log(3.0)).epsilon(1e-12));

  for (const auto& sys : {DigitSystem(2, 0), DigitSystem(5, 2), DigitSystem(9, 4)}) {
    const auto r = box_count_estimate(sys, 1);
    CHECK(r.estimate == doctest::Approx(r.closed_form).epsilon(1e-15));
  }
  CHECK_THROWS_AS(box_count_estimate(DigitSystem(2, 0), 0), DomainError);
  CHECK_THROWS_AS(box_count_estimate(DigitSystem(3, 1), 6, Limits{1000}), ResourceError);
}

TEST_CASE("estimator is exact for m <= 8, n <= 4; counts come from generation") {
  for (int m = 2; m <= 8; ++m) {
    for (int b = 0; b <= m / 2; ++b) {
      if (!DigitSystem::is_legal(m, b)) continue;
      const DigitSystem sys(m, b);
      std::uint64_t expected = 1;
      for (int n = 1; n <= 4; ++n) {
        CAPTURE(m);
        CAPTURE(b);
        CAPTURE(n);
        expected *= static_cast<std::uint64_t>(lattice_cardinality(m, b));
        const auto r = box_count_estimate(sys, n);
        CHECK(r.box_count == expected);
        CHECK(r.box_count == generate(sys, n).size());
        CHECK(std::abs(r.estimate - r.closed_form) <= 1e-12 * r.closed_form);
        CHECK(r.abs_error == std::abs(r.estimate - r.closed_form));
      }
    }
  }
}

TEST_CASE("Lebesgue measure") {
  CHECK(lebesgue_measure(DigitSystem(2, 0), 1) == Rational::parse("3/4"));
  CHECK(lebesgue_measure(DigitSystem(5, 2), 0) == Rational(1));
  CHECK(lebesgue_measure(DigitSystem(3, 1), 2) == Rational::parse("49/81"));
  for (int m = 2; m <= 7; ++m) {
    const Rational standard = Rational(Integer(1), Integer(2)) + Rational(Integer(1), Integer(2 * m));
    for (int n = 0; n <= 10; ++n) {
      CHECK(lebesgue_measure(DigitSystem(m, 0), n) == pow(standard, static_cast<unsigned>(n)));
    }
  }
  for (const auto& sys : {DigitSystem(2, 0), DigitSystem(3, 1), DigitSystem(4, 2), DigitSystem(10, 5)}) {
    for (int n = 0; n < 20; ++n) CHECK(lebesgue_measure(sys, n + 1) < lebesgue_measure(sys, n));
  }
  CHECK(lebesgue_measure(DigitSystem(2, 0), 20) < Rational(Integer(1), Integer(100)));
  CHECK_THROWS_AS(lebesgue_measure(DigitSystem(2, 0), -1), DomainError);
}

TEST_CASE("dimension bounds and monotonicity") {
  for (int m = 2; m <= 60; ++m) {
    for (int b = 0; b <= m / 2; ++b) {
      if (!DigitSystem::is_legal(m, b)) continue;
      const double d = closed_form_dim(m, b);
      CHECK(d > 1.0);
      CHECK(d < 2.0);
      if (b >= 1 && 2 * b <= m - 1) CHECK(d > closed_form_dim(m, b - 1));
    }
  }
}

TEST_CASE("dimension limit table") {
  const std::vector<int> ms{2, 10, 100};
  const auto table = dim_limit_table(0, ms);
  REQUIRE(table.size() == 3);
  CHECK(table[0].second == doctest::Approx(1.58496250072).epsilon(1e-11));
  CHECK(table[1].second == doctest::Approx(1.74036268949).epsilon(1e-11));
  CHECK(table[2].second == doctest::Approx(1.85164568906).epsilon(1e-11));
  CHECK(table[0].second < table[1].second);
  CHECK(table[1].second < table[2].second);
  CHECK(table[2].second < 2.0);

  const std::vector<int> balanced{3, 9, 99};
  const auto t1 = dim_limit_table(1, balanced);
  CHECK(t1[0].second == doctest::Approx(1.77124374916).epsilon(1e-11));
  CHECK(t1[1].second == doctest::Approx(1.79828851331).epsilon(1e-11));
  CHECK(t1[2].second == doctest::Approx(1.85556624515).epsilon(1e-11));
  CHECK(t1[0].second < t1[1].second);
  CHECK(t1[1].second < t1[2].second);
  CHECK(t1[2].second < 2.0);

  const std::vector<int> single{7};
  const auto one = dim_limit_table(0, single);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::pair<int, double>{7, closed_form_dim(7, 0)});
  const std::vector<int> illegal{2};
  CHECK_THROWS_AS(dim_limit_table(1, illegal), DomainError);
}

TEST_CASE("JSON report line") {
  const auto line = to_json_line(box_count_estimate(DigitSystem(3, 1), 3));
  CHECK(line.rfind(R"({"m":3,"b":1,"depth":3,"box_count":343,"estimate":1.77124374916,"closed_form":1.77124374916,"abs_error":)", 0) == 0);
  CHECK(line.back() == '}');
}
