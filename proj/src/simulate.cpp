#include "ftloop/simulate.hpp"

#include "ftloop/error.hpp"

namespace ftloop {

SimResult simulate(const FaultTree& tree, const Trajectory& trajectory) {
  SimResult result;
  Assignment a(tree.basic_count(), false);
  StateVector gates(tree.gate_count(), false);

  const auto& events = trajectory.events;
  std::size_t i = 0;
  while (i < events.size()) {
    const double time = events[i].time;
    for (; i < events.size() && events[i].time == time; ++i) {
      const auto& ev = events[i];
      auto b = tree.basic_index(ev.basic_id);
      if (!b) {
        throw Error(ErrorCode::UnknownBasic, "trajectory names unknown basic event " + ev.basic_id,
                    ev.basic_id);
      }
      if (a[*b] && !ev.value && tree.basics()[*b].kind == EventKind::NonRepairable) {
        throw Error(ErrorCode::IllegalRepair,
                    "non-repairable basic event " + ev.basic_id + " cannot return to FALSE",
                    ev.basic_id);
      }
      a.set(*b, ev.value);
    }

    RelaxResult relax = relax_from_state(tree, a, gates);
    if (relax.is_fixpoint()) {
      gates = relax.fixpoint();
    } else {
      result.oscillated = true;
      gates = relax.states.back();
    }
    result.timeline.push_back(SimStep{time, a, std::move(relax)});
  }
  if (!result.oscillated) result.final_state = gates;
  return result;
}

}  // namespace ftloop
