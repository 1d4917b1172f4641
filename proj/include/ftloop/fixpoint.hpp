#pragma once

#include <cstddef>
#include <vector>

#include "ftloop/tree.hpp"

namespace ftloop {

/// One synchronous sweep: every gate body evaluated against the same
/// previous state.
StateVector apply_equations(const FaultTree& tree, const Assignment& a, const StateVector& s);

/// Least gate state consistent with `a`. Starts from all-FALSE and sweeps
/// synchronously; the ascent is monotone, so it stops within gate_count() + 1
/// sweeps.
StateVector eval_least_fixpoint(const FaultTree& tree, const Assignment& a);

struct RelaxResult {
  enum class Outcome { Fixpoint, Oscillation };

  Outcome outcome = Outcome::Fixpoint;
  // Fixpoint: one entry, the stable state.
  // Oscillation: the cycle in production order; one sweep applied to the
  // last entry yields the first.
  std::vector<StateVector> states;
  std::size_t sweeps = 0;

  bool is_fixpoint() const { return outcome == Outcome::Fixpoint; }
  const StateVector& fixpoint() const { return states.front(); }
};

/// Synchronous sweeps from `start` under a fixed assignment until a state
/// repeats. Never resolves an oscillation; reports it.
RelaxResult relax_from_state(const FaultTree& tree, const Assignment& a, const StateVector& start);

}  // namespace ftloop
