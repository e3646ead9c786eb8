// Single-threaded reference constructions. Deliberately naive: build,
// sort, compare. Tests check the OpenMP kernels in fractal.cpp against these.

#include <algorithm>
#include <stdexcept>

#include "digifrac/errors.hpp"
#include "digifrac/fractal.hpp"

namespace digifrac::serial {

Prefractal iterate(const Prefractal& p, const GeneratorLattice& lat, const Limits& limits) {
  if (!(p.system() == lat.system)) throw DomainError("lattice and prefractal systems differ");
  if (p.size() * lat.points.size() > limits.max_squares) {
    throw ResourceError("prefractal would exceed " + std::to_string(limits.max_squares) + " squares");
  }
  std::int64_t scale = 1;
  for (int n = 0; n < p.depth(); ++n) scale *= p.system().radix();

  std::vector<Square> out;
  out.reserve(p.size() * lat.points.size());
  for (const auto& s : p.squares()) {
    for (const auto& pt : lat.points) out.push_back({s.i + pt.k * scale, s.j + pt.h * scale});
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::logic_error("IFS step produced a duplicate square");
  }
  return Prefractal(p.system(), p.depth() + 1, std::move(out));
}

Prefractal generate(DigitSystem system, int depth, const Limits& limits) {
  const auto lat = lattice(system);
  Prefractal p = unit_square(system);
  for (int n = 0; n < depth; ++n) p = serial::iterate(p, lat, limits);
  return p;
}

Prefractal prefractal_by_digits(DigitSystem system, int depth, const Limits& limits) {
  const auto [lo, hi] = index_range(system, depth);
  std::vector<DigitString> numerals;
  for (std::int64_t v = lo; v <= hi; ++v) numerals.push_back(int_to_digits(Integer(v), system));

  std::vector<Square> out;
  for (std::int64_t a = lo; a <= hi; ++a) {
    for (std::int64_t c = lo; c <= hi; ++c) {
      const auto& x = numerals[static_cast<std::size_t>(a - lo)];
      const auto& y = numerals[static_cast<std::size_t>(c - lo)];
      if (carry_free(x, y)) out.push_back({a, c});
    }
    if (out.size() > limits.max_squares) {
      throw ResourceError("prefractal would exceed " + std::to_string(limits.max_squares) + " squares");
    }
  }
  return Prefractal(system, depth, std::move(out));
}

}  // namespace digifrac::serial
