#include "digifrac/fractal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>


#include "digifrac/errors.hpp"

namespace digifrac {

namespace {

std::int64_t checked_pow(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int e = 0; e < exponent; ++e) {
    if (__builtin_mul_overflow(out, base, &out)) {
      throw ResourceError("grid scale " + std::to_string(base) + "^" + std::to_string(exponent) +
                          " overflows 64-bit indices");
    }
  }
  return out;
}

std::uint64_t checked_count(std::uint64_t current, std::uint64_t factor, const Limits& limits) {
  std::uint64_t total = 0;
  if (__builtin_mul_overflow(current, factor, &total) || total > limits.max_squares) {
    throw ResourceError("prefractal would exceed " + std::to_string(limits.max_squares) +
                        " squares");
  }
  return total;
}

void require_depth(int depth) {
  if (depth < 0) throw DomainError("depth must be non-negative");
}

// Strictly increasing check over the whole vector, used as the duplicate
// assertion for the IFS kernel.
bool strictly_increasing(const std::vector<Square>& v) {
  bool bad = false;
  const auto n = static_cast<std::int64_t>(v.size());
#pragma omp parallel for reduction(|| : bad) schedule(static)
  for (std::int64_t t = 1; t < n; ++t) {
    bad = bad || !(v[t - 1] < v[t]);
  }
  return !bad;
}

}  // namespace

GeneratorLattice lattice(DigitSystem system) {
  GeneratorLattice out{system, {}};
  for (int k = system.min_digit(); k <= system.max_digit(); ++k) {
    for (int h = system.min_digit(); h <= system.max_digit(); ++h) {
      if (system.is_digit(k + h)) out.points.push_back({k, h});
    }
  }
  return out;
}

GeneratorLattice lattice(int m, int b) { return lattice(DigitSystem(m, b)); }

std::int64_t lattice_cardinality(int m, int b) {
  const DigitSystem sys(m, b);
  const std::int64_t mm = sys.radix();
  const std::int64_t bb = sys.balance();
  return mm * (mm + 1) / 2 + bb * (mm - 1 - bb);
}

Prefractal::Prefractal(DigitSystem system, int depth, std::vector<Square> squares)
    : system_(system), depth_(depth), squares_(std::move(squares)) {
  require_depth(depth);
  if (std::adjacent_find(squares_.begin(), squares_.end(),
                         [](const Square& a, const Square& b) { return !(a < b); }) !=
      squares_.end()) {
    throw DomainError("prefractal squares must be sorted and distinct");
  }
}

bool Prefractal::contains(Square s) const {
  return std::binary_search(squares_.begin(), squares_.end(), s);
}

Prefractal unit_square(DigitSystem system) { return Prefractal(system, 0, {{0, 0}}); }

// The output is written directly in sorted order. With scale = m^depth every
// depth-n index spans fewer than `scale` consecutive integers, so shifting by
// k*scale moves whole blocks past each other: the result is ordered by k,
// then by the source row i, then by h, then by the source column j.
Prefractal iterate(const Prefractal& p, const GeneratorLattice& lat, const Limits& limits) {
  if (!(p.system() == lat.system)) throw DomainError("lattice and prefractal systems differ");
  const int m = p.system().radix();
  const std::int64_t scale = checked_pow(m, p.depth());
  checked_pow(m, p.depth() + 1);
  const auto total = checked_count(p.size(), lat.points.size(), limits);

  const auto& src = p.squares();
  std::vector<std::int64_t> row_start;
  for (std::size_t t = 0; t < src.size(); ++t) {
    if (t == 0 || src[t].i != src[t - 1].i) row_start.push_back(static_cast<std::int64_t>(t));
  }
  row_start.push_back(static_cast<std::int64_t>(src.size()));

  struct Group {
    int k;
    std::vector<int> hs;
    std::int64_t offset;
  };
  std::vector<Group> groups;
  std::int64_t offset = 0;
  for (const auto& pt : lat.points) {
    if (groups.empty() || groups.back().k != pt.k) {
      if (!groups.empty()) offset += static_cast<std::int64_t>(src.size() * groups.back().hs.size());
      groups.push_back({pt.k, {}, offset});
    }
    groups.back().hs.push_back(pt.h);
  }

  std::vector<Square> out(total);
  const auto rows = static_cast<std::int64_t>(row_start.size()) - 1;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t r = 0; r < rows; ++r) {
    const std::int64_t begin = row_start[r];
    const std::int64_t len = row_start[r + 1] - begin;
    const std::int64_t i = src[begin].i;
    for (const auto& g : groups) {
      const auto width = static_cast<std::int64_t>(g.hs.size());
      std::int64_t pos = g.offset + begin * width;
      for (const int h : g.hs) {
        for (std::int64_t t = 0; t < len; ++t) {
          out[pos++] = {i + g.k * scale, src[begin + t].j + h * scale};
        }
      }
    }
  }

  if (!strictly_increasing(out)) {
    throw std::logic_error("IFS step produced a duplicate or misordered square");
  }
  return Prefractal(p.system(), p.depth() + 1, std::move(out));
}

Prefractal generate(DigitSystem system, int depth, const Limits& limits) {
  require_depth(depth);
  const auto lat = lattice(system);
  Prefractal p = unit_square(system);
  for (int n = 0; n < depth; ++n) p = iterate(p, lat, limits);
  return p;
}

std::pair<std::int64_t, std::int64_t> index_range(DigitSystem system, int depth) {
  require_depth(depth);
  const std::int64_t span = (checked_pow(system.radix(), depth) - 1) / (system.radix() - 1);
  return {-static_cast<std::int64_t>(system.balance()) * span,
          static_cast<std::int64_t>(system.max_digit()) * span};
}

std::vector<int> index_digits(std::int64_t index, DigitSystem system, int depth) {
  const auto [lo, hi] = index_range(system, depth);
  if (index < lo || index > hi) {
    throw DomainError("index " + std::to_string(index) + " has no depth-" +
                      std::to_string(depth) + " digit decomposition");
  }
  std::vector<int> digits(static_cast<std::size_t>(depth));
  for (auto& d : digits) {
    d = system.digit_congruent_to(index);
    index = (index - d) / system.radix();
  }
  return digits;
}

std::int64_t parent_index(std::int64_t index, DigitSystem system) {
  return (index - system.digit_congruent_to(index)) / system.radix();
}

ValueInterval attractor_cell(std::int64_t index, DigitSystem system, int depth) {
  require_depth(depth);
  const auto iv = system.value_interval();
  const Rational scale(Integer(1), boost::multiprecision::pow(Integer(system.radix()),
                                                              static_cast<unsigned>(depth)));
  return {(Rational(Integer(index)) + iv.lo) * scale, (Rational(Integer(index)) + iv.hi) * scale};
}

namespace {

// Integers t with v in m^-n (t + [lo, hi]), clipped to the index range.
std::vector<std::int64_t> candidate_indices(const Rational& v, DigitSystem system, int depth) {
  const auto iv = system.value_interval();
  const Rational scaled =
      v * Rational(boost::multiprecision::pow(Integer(system.radix()), static_cast<unsigned>(depth)));
  const Integer first = (scaled - iv.hi).ceil();
  const Integer last = (scaled - iv.lo).floor();
  const auto [lo, hi] = index_range(system, depth);
  std::vector<std::int64_t> out;
  for (Integer t = first; t <= last; ++t) {
    if (t >= lo && t <= hi) out.push_back(static_cast<std::int64_t>(t));
  }
  return out;
}

}  // namespace

bool cover_contains(const Prefractal& p, const Rational& x, const Rational& y) {
  const auto is = candidate_indices(x, p.system(), p.depth());
  const auto js = candidate_indices(y, p.system(), p.depth());
  for (const auto i : is) {
    for (const auto j : js) {
      if (p.contains({i, j})) return true;
    }
  }
  return false;
}

bool square_satisfies_digit_condition(Square s, DigitSystem system, int depth) {
  const auto [lo, hi] = index_range(system, depth);
  if (s.i < lo || s.i > hi || s.j < lo || s.j > hi) return false;
  const auto di = index_digits(s.i, system, depth);
  const auto dj = index_digits(s.j, system, depth);
  for (int t = 0; t < depth; ++t) {
    if (!system.is_digit(di[t] + dj[t])) return false;
  }
  return true;
}

Prefractal prefractal_by_digits(DigitSystem system, int depth, const Limits& limits) {
  require_depth(depth);
  std::uint64_t expected = 1;
  const auto ell = static_cast<std::uint64_t>(lattice_cardinality(system.radix(), system.balance()));
  for (int n = 0; n < depth; ++n) expected = checked_count(expected, ell, limits);

  const auto [lo, hi] = index_range(system, depth);
  const std::int64_t count = hi - lo + 1;
  const auto stride = static_cast<std::size_t>(depth);
  std::vector<int> table(static_cast<std::size_t>(count) * stride);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < count; ++t) {
    std::int64_t v = lo + t;
    for (std::size_t pos = 0; pos < stride; ++pos) {
      const int d = system.digit_congruent_to(v);
      table[static_cast<std::size_t>(t) * stride + pos] = d;
      v = (v - d) / system.radix();
    }
  }

  const int min_sum = system.min_digit();
  const int max_sum = system.max_digit();
  std::vector<std::vector<Square>> rows(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t a = 0; a < count; ++a) {
    const int* da = table.data() + static_cast<std::size_t>(a) * stride;
    auto& row = rows[static_cast<std::size_t>(a)];
    for (std::int64_t c = 0; c < count; ++c) {
      const int* dc = table.data() + static_cast<std::size_t>(c) * stride;
      bool ok = true;
      for (std::size_t pos = 0; pos < stride && ok; ++pos) {
        const int s = da[pos] + dc[pos];
        ok = s >= min_sum && s <= max_sum;
      }
      if (ok) row.push_back({lo + a, lo + c});
    }
  }

  std::vector<Square> out;
  out.reserve(expected);
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return Prefractal(system, depth, std::move(out));
}

bool equivalence_check(DigitSystem system, int depth, const Limits& limits) {
  return generate(system, depth, limits) == prefractal_by_digits(system, depth, limits);
}

}  // namespace digifrac
