#pragma once

#include <optional>
#include <vector>

#include "ftloop/fixpoint.hpp"
#include "ftloop/parser.hpp"
#include "ftloop/tree.hpp"

namespace ftloop {

struct SimStep {
  double time = 0.0;
  Assignment assignment;  // after applying every event at `time`
  RelaxResult relax;
};

struct SimResult {
  std::vector<SimStep> timeline;  // one step per distinct event time
  // Gate state after the last step; absent once any step oscillated.
  std::optional<StateVector> final_state;
  bool oscillated = false;
};

/// Replays basic-event flips from the all-FALSE state. Events sharing a
/// timestamp are applied together (in file order), then the gates settle by
/// synchronous sweeps from their previous state. After an oscillation the
/// next step starts from the last state of the reported cycle.
///
/// Throws UnknownBasic, or IllegalRepair when a non-repairable event goes
/// from TRUE back to FALSE.
SimResult simulate(const FaultTree& tree, const Trajectory& trajectory);

}  // namespace ftloop
