#include "digifrac/membership.hpp"

#include <vector>

#include "digifrac/errors.hpp"

namespace digifrac {

MembershipAutomaton::MembershipAutomaton(DigitSystem system, std::size_t state_cap)
    : system_(system), state_cap_(state_cap) {}

MembershipAutomaton::Status MembershipAutomaton::status(const Rational& rx, const Rational& ry) const {
  const auto it = states_.find({rx, ry});
  return it == states_.end() ? Status::unknown : it->second;
}

// Iterative three-colour DFS. `unknown` entries in the memo are the grey
// states on the current path; hitting one closes a cycle. Finished states
// without a cycle below them are dead. On success every state on the path
// is marked alive.
bool MembershipAutomaton::accepts(const Rational& x, const Rational& y) {
  const auto iv = system_.value_interval();
  if (!iv.contains(x) || !iv.contains(y)) return false;

  struct Frame {
    State state;
    std::vector<State> successors;
    std::size_t next = 0;
  };

  auto successors_of = [&](const State& s) {
    std::vector<State> out;
    const auto xs = frac_digit_choices(s.first, system_);
    const auto ys = frac_digit_choices(s.second, system_);
    for (const auto& cx : xs) {
      for (const auto& cy : ys) {
        if (system_.is_digit(cx.digit + cy.digit)) out.emplace_back(cx.remainder, cy.remainder);
      }
    }
    return out;
  };

  std::vector<Frame> path;
  auto enter = [&](const State& s) {
    if (states_.size() >= state_cap_) {
      throw ResourceError("membership automaton exceeded " + std::to_string(state_cap_) + " states");
    }
    states_.emplace(s, Status::unknown);
    path.push_back({s, successors_of(s), 0});
  };

  const State start{x, y};
  if (const auto st = status(x, y); st != Status::unknown) return st == Status::alive;

  try {
    enter(start);
    while (!path.empty()) {
      Frame& top = path.back();
      if (top.next == top.successors.size()) {
        states_[top.state] = Status::dead;
        path.pop_back();
        continue;
      }
      const State succ = top.successors[top.next++];
      const auto it = states_.find(succ);
      if (it == states_.end()) {
        enter(succ);
      } else if (it->second == Status::unknown || it->second == Status::alive) {
        for (const auto& f : path) states_[f.state] = Status::alive;
        return true;
      }
    }
  } catch (...) {
    // Grey states of an abandoned search must not look like cycles later.
    for (const auto& f : path) states_.erase(f.state);
    throw;
  }
  return false;
}

bool member(const Rational& x, const Rational& y, DigitSystem system) {
  MembershipAutomaton automaton(system);
  return automaton.accepts(x, y);
}

}  // namespace digifrac
