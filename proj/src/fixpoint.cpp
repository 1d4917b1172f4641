#include "ftloop/fixpoint.hpp"

#include <map>
#include <stdexcept>

namespace ftloop {

StateVector apply_equations(const FaultTree& tree, const Assignment& a, const StateVector& s) {
  StateVector next(tree.gate_count());
  for (std::size_t g = 0; g < tree.gate_count(); ++g) {
    next.set(g, evaluate(tree.expanded_body(g), a, s));
  }
  return next;
}

StateVector eval_least_fixpoint(const FaultTree& tree, const Assignment& a) {
  StateVector s(tree.gate_count(), false);
  for (std::size_t sweep = 0; sweep <= tree.gate_count(); ++sweep) {
    StateVector next = apply_equations(tree, a, s);
    if (next == s) return s;
    s = std::move(next);
  }
  throw std::logic_error("eval_least_fixpoint: ascent did not stabilize");
}

RelaxResult relax_from_state(const FaultTree& tree, const Assignment& a, const StateVector& start) {
  RelaxResult result;
  std::vector<StateVector> trace{start};
  std::map<StateVector, std::size_t> seen{{start, 0}};
  while (true) {
    StateVector next = apply_equations(tree, a, trace.back());
    ++result.sweeps;
    if (next == trace.back()) {
      result.outcome = RelaxResult::Outcome::Fixpoint;
      result.states = {std::move(next)};
      return result;
    }
    auto [it, inserted] = seen.emplace(next, trace.size());
    if (!inserted) {
      result.outcome = RelaxResult::Outcome::Oscillation;
      result.states.assign(trace.begin() + static_cast<std::ptrdiff_t>(it->second) + 1,
                           trace.end());
      result.states.push_back(std::move(next));
      return result;
    }
    trace.push_back(std::move(next));
  }
}

}  // namespace ftloop
