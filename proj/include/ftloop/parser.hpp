#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ftloop/tree.hpp"

namespace ftloop {

/// Model DSL:
///
///   basic Aa p=0.1 kind=repairable
///   gate A = Aa | (Ab & B) | koon(2, X, Y, Z)
///   top A, B
///   # comment
///
/// `&` binds tighter than `|`. Keywords `basic`, `gate`, `top` are reserved.
/// Errors carry the 1-based line and column of the offending token.
FaultTree parse_tree(std::string_view text);

/// One statement per line: basics, then gates in declaration order with fully
/// parenthesized bodies, then a single `top` line.
std::string serialize(const FaultTree& tree);
std::string serialize(const Expr& expr);

struct TrajectoryEvent {
  double time = 0.0;
  std::string basic_id;
  bool value = false;

  bool operator==(const TrajectoryEvent&) const = default;
};

/// Events in file order; times are nondecreasing.
struct Trajectory {
  std::vector<TrajectoryEvent> events;
};

/// CSV lines `time,basic_id,value` with value in {0,1}. Blank lines and
/// lines starting with '#' are skipped.
Trajectory parse_trajectory(std::string_view text);

}  // namespace ftloop
