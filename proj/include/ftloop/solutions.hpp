#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ftloop/tree.hpp"

namespace ftloop {

inline constexpr std::size_t kMaxLoopGates = 20;
inline constexpr std::size_t kMaxTableBasics = 20;

/// Every gate state consistent with the equations for one assignment.
struct SolutionReport {
  Assignment assignment;
  std::vector<StateVector> solutions;  // ascending lexicographic order
  StateVector least;
  std::vector<bool> dual;  // per gate: value differs between solutions

  bool has_dual() const;
};

/// Brute force over the gates that sit in loops (at most kMaxLoopGates);
/// loop-free gates are computed from them. Checks that the pointwise minimum
/// of the solutions is itself a solution and equals eval_least_fixpoint().
/// Throws TooManyLoopGates.
SolutionReport enumerate_solutions(const FaultTree& tree, const Assignment& a);

/// Indices of gates that belong to a cyclic component, in declaration order.
std::vector<std::size_t> loop_gates(const FaultTree& tree);

struct StateTableRow {
  Assignment assignment;
  // Per candidate: one synchronous sweep maps it to itself.
  std::vector<bool> available;
  std::size_t solution_count = 0;
  StateVector least;
  std::vector<bool> dual;
};

struct StateTable {
  std::vector<StateVector> candidates;
  // One row per assignment in binary counting order; the first declared
  // basic event is the most significant bit.
  std::vector<StateTableRow> rows;
};

/// Assignment number `index` in binary counting order (first basic = MSB).
Assignment assignment_from_index(std::size_t basic_count, std::size_t index);

/// All 2^gate_count() gate states in binary counting order (first gate = MSB).
std::vector<StateVector> all_states(std::size_t gate_count);

/// Full table over all 2^basic_count() assignments (at most kMaxTableBasics
/// basics, else TooManyBasics). Rows are computed on up to `threads` worker
/// threads; the row order does not depend on it.
StateTable build_state_table(const FaultTree& tree,
                             const std::optional<std::vector<StateVector>>& candidates = std::nullopt,
                             unsigned threads = 1);

}  // namespace ftloop
