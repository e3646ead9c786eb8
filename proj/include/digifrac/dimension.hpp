#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "digifrac/fractal.hpp"
#include "digifrac/rational.hpp"

namespace digifrac {

struct DimensionReport {
  int m;
  int b;
  int depth;
  std::uint64_t box_count;  // N(m^-n)
  double estimate;          // log N / (n log m)
  double closed_form;
  double abs_error;
};

/// log(m(m+1)/2 + b(m-1-b)) / log m.
double closed_form_dim(int m, int b);

/// Box count on the m-adic grid at eps = m^-n, taken from the generated
/// prefractal. Requires n >= 1.
DimensionReport box_count_estimate(DigitSystem system, int depth, const Limits& limits = {});

/// Exact area of the depth-n prefractal: l^n / m^(2n).
Rational lebesgue_measure(DigitSystem system, int depth);

/// closed_form_dim(m, b) for each m.
std::vector<std::pair<int, double>> dim_limit_table(int b, std::span<const int> m_values);

/// One JSON object, fields in the order m, b, depth, box_count, estimate,
/// closed_form, abs_error; reals with 12 significant digits.
std::string to_json_line(const DimensionReport& r);

}  // namespace digifrac
