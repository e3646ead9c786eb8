#pragma once

// Prefractals of the triangle (b = 0) and hexagon (b >= 1) fractals.
//
// A depth-n prefractal is a set of grid squares (i, j) of side m^-n. Square
// indices are integers; i's depth-n alphabet decomposition
// i = sum_{t<n} d_t m^t lists the fractional base-m digits of the square's
// corner, d_{n-1} being the first digit after the point and d_0 the n-th.
//
// Two constructions are provided and must agree:
//   * iterate(): the IFS step, every square scaled by 1/m and shifted by
//     (k/m, h/m) for each generator (k, h);
//   * prefractal_by_digits(): all (i, j) whose digits satisfy
//     -b <= d_t + e_t <= m-1-b at every position.
//
// The parallel kernels live in fractal.cpp; fractal_serial.cpp keeps
// straightforward single-threaded versions used as test references.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "digifrac/radix.hpp"

namespace digifrac {

struct LatticePoint {
  int k;
  int h;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Generator shifts {(k, h) : k, h, k + h in [-b, m-1-b]}, sorted.
struct GeneratorLattice {
  DigitSystem system;
  std::vector<LatticePoint> points;
};

GeneratorLattice lattice(int m, int b);
GeneratorLattice lattice(DigitSystem system);

/// m(m+1)/2 + b(m-1-b), the number of generator shifts.
std::int64_t lattice_cardinality(int m, int b);

struct Square {
  std::int64_t i;
  std::int64_t j;
  friend auto operator<=>(const Square&, const Square&) = default;
};

struct Limits {
  std::uint64_t max_squares = 10'000'000;
};

class Prefractal {
 public:
  /// `squares` must be sorted and duplicate-free.
  Prefractal(DigitSystem system, int depth, std::vector<Square> squares);

  const DigitSystem& system() const noexcept { return system_; }
  int depth() const noexcept { return depth_; }
  const std::vector<Square>& squares() const noexcept { return squares_; }
  std::size_t size() const noexcept { return squares_.size(); }
  bool contains(Square s) const;

  friend bool operator==(const Prefractal&, const Prefractal&) = default;

 private:
  DigitSystem system_;
  int depth_;
  std::vector<Square> squares_;
};

Prefractal unit_square(DigitSystem system);

/// One IFS step. Throws ResourceError if the result would exceed
/// `limits.max_squares` or overflow 64-bit indices, and std::logic_error if
/// the construction ever yields a duplicate square.
Prefractal iterate(const Prefractal& p, const GeneratorLattice& lat, const Limits& limits = {});

/// `depth` IFS steps from the unit square.
Prefractal generate(DigitSystem system, int depth, const Limits& limits = {});

/// Filters the whole depth-n index box by the positionwise digit condition.
Prefractal prefractal_by_digits(DigitSystem system, int depth, const Limits& limits = {});

/// True iff the IFS and digit constructions give the same square set.
bool equivalence_check(DigitSystem system, int depth, const Limits& limits = {});

/// Inclusive range of integers with a depth-n alphabet decomposition:
/// [-b(m^n-1)/(m-1), (m-1-b)(m^n-1)/(m-1)]. Exactly m^n integers.
std::pair<std::int64_t, std::int64_t> index_range(DigitSystem system, int depth);

/// Depth-n digits of `index`, least significant first. Throws DomainError
/// when the index is outside index_range().
std::vector<int> index_digits(std::int64_t index, DigitSystem system, int depth);

/// Index of the depth-(n-1) square obtained by dropping the deepest digit.
/// For b = 0 this is floor division by m.
std::int64_t parent_index(std::int64_t index, DigitSystem system);

/// The closed interval m^-n * (index + [lo, hi]) covered by the limit set's
/// points whose first n digits spell `index`. For b = 0 this is the grid
/// cell [index/m^n, (index+1)/m^n].
ValueInterval attractor_cell(std::int64_t index, DigitSystem system, int depth);

/// Whether (x, y) lies in the closed union of attractor cells of p's squares.
bool cover_contains(const Prefractal& p, const Rational& x, const Rational& y);

/// Digit-condition test for a single square, without building the set.
bool square_satisfies_digit_condition(Square s, DigitSystem system, int depth);

// JSON export: {"m":3,"b":1,"depth":2,"count":49,"squares":[[i,j],...]}
std::string to_json(const Prefractal& p);
/// Throws ParseError on malformed documents, DomainError on squares that
/// are not valid depth-n indices or on a count mismatch.
Prefractal prefractal_from_json(std::string_view text);

namespace serial {

Prefractal iterate(const Prefractal& p, const GeneratorLattice& lat, const Limits& limits = {});
Prefractal generate(DigitSystem system, int depth, const Limits& limits = {});
/// Decomposes indices through int_to_digits instead of the kernel's table.
Prefractal prefractal_by_digits(DigitSystem system, int depth, const Limits& limits = {});

}  // namespace serial

}  // namespace digifrac
