#include "digifrac/dimension.hpp"

#include <cmath>
#include <cstdio>

#include "digifrac/errors.hpp"

namespace digifrac {

double closed_form_dim(int m, int b) {
  const auto ell = static_cast<double>(lattice_cardinality(m, b));
  return std::log(ell) / std::log(static_cast<double>(m));
}

DimensionReport box_count_estimate(DigitSystem system, int depth, const Limits& limits) {
  if (depth < 1) throw DomainError("box counting needs depth >= 1");
  const auto p = generate(system, depth, limits);
  const int m = system.radix();
  const auto count = static_cast<std::uint64_t>(p.size());
  const double estimate =
      std::log(static_cast<double>(count)) / (depth * std::log(static_cast<double>(m)));
  const double exact = closed_form_dim(m, system.balance());
  return {m, system.balance(), depth, count, estimate, exact, std::abs(estimate - exact)};
}

Rational lebesgue_measure(DigitSystem system, int depth) {
  if (depth < 0) throw DomainError("depth must be non-negative");
  const Integer ell = lattice_cardinality(system.radix(), system.balance());
  const Integer m = system.radix();
  const auto n = static_cast<unsigned>(depth);
  return Rational(boost::multiprecision::pow(ell, n), boost::multiprecision::pow(m, 2 * n));
}

std::vector<std::pair<int, double>> dim_limit_table(int b, std::span<const int> m_values) {
  std::vector<std::pair<int, double>> out;
  out.reserve(m_values.size());
  for (const int m : m_values) out.emplace_back(m, closed_form_dim(m, b));
  return out;
}

std::string to_json_line(const DimensionReport& r) {
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "{\"m\":%d,\"b\":%d,\"depth\":%d,\"box_count\":%llu,\"estimate\":%.12g,"
                "\"closed_form\":%.12g,\"abs_error\":%.12g}",
                r.m, r.b, r.depth, static_cast<unsigned long long>(r.box_count), r.estimate,
                r.closed_form, r.abs_error);
  return buf;
}

}  // namespace digifrac
