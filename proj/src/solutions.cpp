#include "ftloop/solutions.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "ftloop/error.hpp"
#include "ftloop/fixpoint.hpp"
#include "ftloop/loops.hpp"

namespace ftloop {

bool SolutionReport::has_dual() const {
  return std::find(dual.begin(), dual.end(), true) != dual.end();
}

std::vector<std::size_t> loop_gates(const FaultTree& tree) {
  auto graph = build_dependency_graph(tree);
  std::vector<std::size_t> out;
  for (const auto& component : strongly_connected_components(graph)) {
    if (is_cyclic(graph, component)) out.insert(out.end(), component.begin(), component.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Precomputed enumeration plan for one tree.
struct Plan {
  std::vector<std::size_t> loop;     // free variables
  std::vector<std::size_t> derived;  // loop-free gates, dependencies first
};

Plan make_plan(const FaultTree& tree) {
  auto graph = build_dependency_graph(tree);
  Plan plan;
  for (const auto& component : strongly_connected_components(graph)) {
    if (is_cyclic(graph, component)) {
      plan.loop.insert(plan.loop.end(), component.begin(), component.end());
    } else {
      plan.derived.push_back(component.front());
    }
  }
  std::sort(plan.loop.begin(), plan.loop.end());
  if (plan.loop.size() > kMaxLoopGates) {
    throw Error(ErrorCode::TooManyLoopGates,
                std::to_string(plan.loop.size()) + " gates in loops exceed the limit of " +
                    std::to_string(kMaxLoopGates));
  }
  return plan;
}

SolutionReport enumerate_with(const FaultTree& tree, const Plan& plan, const Assignment& a) {
  SolutionReport report;
  report.assignment = a;
  const std::size_t free = plan.loop.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
    StateVector s(tree.gate_count());
    for (std::size_t i = 0; i < free; ++i) s.set(plan.loop[i], (mask >> i) & 1U);
    for (auto g : plan.derived) s.set(g, evaluate(tree.expanded_body(g), a, s));
    bool consistent = std::all_of(plan.loop.begin(), plan.loop.end(), [&](std::size_t g) {
      return evaluate(tree.expanded_body(g), a, s) == s[g];
    });
    if (consistent) report.solutions.push_back(std::move(s));
  }
  std::sort(report.solutions.begin(), report.solutions.end());

  if (report.solutions.empty()) {
    throw std::logic_error("enumerate_solutions: no consistent state for a monotone system");
  }
  report.least = StateVector(tree.gate_count(), true);
  report.dual.assign(tree.gate_count(), false);
  const auto& first = report.solutions.front();
  for (const auto& s : report.solutions) {
    for (std::size_t g = 0; g < tree.gate_count(); ++g) {
      if (!s[g]) report.least.set(g, false);
      if (s[g] != first[g]) report.dual[g] = true;
    }
  }
  if (!std::binary_search(report.solutions.begin(), report.solutions.end(), report.least) ||
      report.least != eval_least_fixpoint(tree, a)) {
    throw std::logic_error("enumerate_solutions: least solution disagrees with fixpoint");
  }
  return report;
}

}  // namespace

SolutionReport enumerate_solutions(const FaultTree& tree, const Assignment& a) {
  return enumerate_with(tree, make_plan(tree), a);
}

Assignment assignment_from_index(std::size_t basic_count, std::size_t index) {
  Assignment a(basic_count);
  for (std::size_t b = 0; b < basic_count; ++b) {
    a.set(b, (index >> (basic_count - 1 - b)) & 1U);
  }
  return a;
}

std::vector<StateVector> all_states(std::size_t gate_count) {
  std::vector<StateVector> out;
  out.reserve(std::size_t{1} << gate_count);
  for (std::size_t i = 0; i < (std::size_t{1} << gate_count); ++i) {
    StateVector s(gate_count);
    for (std::size_t g = 0; g < gate_count; ++g) s.set(g, (i >> (gate_count - 1 - g)) & 1U);
    out.push_back(std::move(s));
  }
  return out;
}

StateTable build_state_table(const FaultTree& tree,
                             const std::optional<std::vector<StateVector>>& candidates,
                             unsigned threads) {
  if (tree.basic_count() > kMaxTableBasics) {
    throw Error(ErrorCode::TooManyBasics,
                std::to_string(tree.basic_count()) + " basic events exceed the table limit of " +
                    std::to_string(kMaxTableBasics));
  }
  StateTable table;
  if (candidates) {
    for (const auto& c : *candidates) {
      if (c.size() != tree.gate_count()) {
        throw Error(ErrorCode::BadAssignment, "candidate state does not cover every gate");
      }
    }
    table.candidates = *candidates;
  }
  const Plan plan = make_plan(tree);
  const std::size_t rows = std::size_t{1} << tree.basic_count();
  table.rows.resize(rows);

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      Assignment a = assignment_from_index(tree.basic_count(), r);
      SolutionReport report = enumerate_with(tree, plan, a);
      StateTableRow& row = table.rows[r];
      row.available.reserve(table.candidates.size());
      for (const auto& c : table.candidates) {
        row.available.push_back(apply_equations(tree, a, c) == c);
      }
      row.solution_count = report.solutions.size();
      row.least = std::move(report.least);
      row.dual = std::move(report.dual);
      row.assignment = std::move(a);
    }
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(rows)));
  if (threads == 1) {
    fill(0, rows);
  } else {
    std::vector<std::exception_ptr> failures(threads);
    {
      std::vector<std::jthread> workers;
      const std::size_t chunk = (rows + threads - 1) / threads;
      for (std::size_t begin = 0, w = 0; begin < rows; begin += chunk, ++w) {
        workers.emplace_back([&, begin, w] {
          try {
            fill(begin, std::min(rows, begin + chunk));
          } catch (...) {
            failures[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }
  return table;
}

}  // namespace ftloop
