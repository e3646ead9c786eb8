#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "digifrac/radix.hpp"

namespace digifrac {

/// Decides whether a rational point belongs to the limit set of (m, b):
/// whether x and y admit fractional expansions whose positionwise digit
/// sums all stay in [-b, m-1-b].
///
/// States are remainder pairs (rx, ry); a transition picks digits dx, dy
/// from frac_digit_choices with dx + dy in the alphabet and moves to
/// (m*rx - dx, m*ry - dy). An infinite admissible digit sequence exists iff
/// a cycle is reachable from the start state. Rational inputs only ever
/// reach finitely many states.
///
/// One automaton per query thread; the memo is reused across queries on the
/// same instance.
class MembershipAutomaton {
 public:
  enum class Status { unknown, alive, dead };

  explicit MembershipAutomaton(DigitSystem system, std::size_t state_cap = 1'000'000);

  /// Throws ResourceError if more than `state_cap` states are visited.
  bool accepts(const Rational& x, const Rational& y);

  const DigitSystem& system() const noexcept { return system_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  Status status(const Rational& rx, const Rational& ry) const;

 private:
  using State = std::pair<Rational, Rational>;

  DigitSystem system_;
  std::size_t state_cap_;
  std::map<State, Status> states_;
};

/// Points outside the value-interval box are never members.
bool member(const Rational& x, const Rational& y, DigitSystem system);

}  // namespace digifrac
