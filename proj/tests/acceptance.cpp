// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every expected value is either quoted from the reference results
// or recomputed here by brute force (support/oracle.hpp).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ftloop/cutset.hpp"
#include "ftloop/fixpoint.hpp"
#include "ftloop/parser.hpp"
#include "ftloop/quantify.hpp"
#include "ftloop/simulate.hpp"
#include "ftloop/solutions.hpp"
#include "support/models.hpp"
#include "support/oracle.hpp"

using namespace ftloop;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int number, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check check;
  auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= limit_s) {
    std::ostringstream msg;
    msg << "took " << elapsed << " s, limit " << limit_s << " s";
    check.expect(false, msg.str());
  }
  std::printf("[%s] %2d %s (%.3f s)%s%s\n", check.ok ? "PASS" : "FAIL", number, title, elapsed,
              check.ok ? "" : ": ", check.ok ? "" : check.detail.str().c_str());
  std::fflush(stdout);
  if (!check.ok) ++failures;
}

std::map<std::string, bool> all_false_except(const FaultTree& tree,
                                             std::initializer_list<const char*> on) {
  std::map<std::string, bool> values;
  for (const auto& b : tree.basics()) values[b.id] = false;
  for (auto id : on) values[id] = true;
  return values;
}

void table_one(Check& c) {
  auto tree = parse_tree(testing::kSelfLoop);
  auto table = build_state_table(tree, all_states(1));
  c.expect(table.candidates.size() == 2 && table.rows.size() == 4, "table shape");
  // (Q10,Q11): candidate T0=F available?, T0=T available?
  const bool expected[4][2] = {{true, false}, {true, true}, {false, true}, {false, true}};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t k = 0; k < 2; ++k) {
      c.expect(table.rows[r].available[k] == expected[r][k],
               "row " + std::to_string(r) + " candidate " + std::to_string(k));
    }
  }
  c.expect(table.rows[0].solution_count == 1 && !table.rows[0].least[0], "(F,F) unique FALSE");
  c.expect(table.rows[1].solution_count == 2 && table.rows[1].dual[0] && !table.rows[1].least[0],
           "(F,T) dual with least FALSE");
  auto sim = simulate(tree, parse_trajectory("1,Q11,1\n"));
  c.expect(sim.final_state && !(*sim.final_state)[0], "(F,T) simulated FALSE");
  c.expect(table.rows[2].solution_count == 1 && table.rows[2].least[0], "(T,F) unique TRUE");
  c.expect(table.rows[3].solution_count == 1 && table.rows[3].least[0], "(T,T) unique TRUE");
}

void two_gate_cut_sets(Check& c) {
  auto tree = parse_tree(testing::kTwoGateLoop);
  auto names = cut_set_names(tree, minimal_cut_sets(tree, "A"));
  c.expect(names == std::vector<std::vector<std::string>>{{"Aa"}, {"Ab", "Bb"}}, "cut sets of A");
}

void dual_trajectories(Check& c) {
  auto tree = parse_tree(testing::kTwoGateLoopRepairable);
  auto first = simulate(tree, parse_trajectory("1,Aa,1\n2,Ab,1\n3,Ba,1\n4,Aa,0\n"));
  auto second = simulate(tree, parse_trajectory("1,Ab,1\n2,Ba,1\n"));
  c.expect(first.final_state && (*first.final_state)[0], "first trajectory ends A=TRUE");
  c.expect(second.final_state && !(*second.final_state)[0], "second trajectory ends A=FALSE");
  c.expect(first.timeline.back().assignment == second.timeline.back().assignment,
           "same final assignment");
}

void flip_order_invariance(Check& c) {
  std::mt19937 rng(2024);
  testing::RandomTreeParams params;  // <= 8 gates, <= 10 basics, non-repairable
  std::size_t trees = 0, runs = 0;
  for (; trees < 200; ++trees) {
    auto tree = testing::random_tree(rng, params);
    for (int sample = 0; sample < 3; ++sample) {
      auto bits = testing::bits_of(rng(), tree.basic_count());
      auto least = eval_least_fixpoint(tree, Assignment(bits));
      c.expect(least.bits() == testing::oracle_least(tree, bits), "lfp differs from oracle");
      std::vector<std::size_t> on;
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) on.push_back(i);
      }
      for (int perm = 0; perm < 20; ++perm, ++runs) {
        std::shuffle(on.begin(), on.end(), rng);
        Trajectory t;
        double time = 0.0;
        for (auto i : on) t.events.push_back({time += 1.0, tree.basics()[i].id, true});
        auto sim = simulate(tree, t);
        c.expect(sim.final_state.has_value() && *sim.final_state == least,
                 "final state depends on flip order:\n" + serialize(tree));
        StateVector previous(tree.gate_count(), false);
        for (const auto& step : sim.timeline) {
          c.expect(step.relax.is_fixpoint() && previous.leq(step.relax.fixpoint()),
                   "gate trace not nondecreasing:\n" + serialize(tree));
          if (step.relax.is_fixpoint()) previous = step.relax.fixpoint();
        }
      }
    }
  }
  if (runs < 200 * 20) c.expect(false, "too few runs");
}

void oracle_equivalence(Check& c) {
  std::mt19937 rng(2025);
  testing::RandomTreeParams params;
  params.max_basics = 12;
  for (int iter = 0; iter < 200; ++iter) {
    auto tree = testing::random_tree(rng, params);
    auto dnf = minimal_cut_sets(tree, "G0");
    const std::size_t n = tree.basic_count();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Assignment a(testing::bits_of(mask, n));
      bool by_cut_sets = evaluate(tree, dnf, a, StateVector(tree.gate_count()));
      if (by_cut_sets != eval_least_fixpoint(tree, a)[0]) {
        c.expect(false, "cut sets disagree with fixpoint:\n" + serialize(tree));
        break;
      }
    }
    std::vector<std::string> order;
    for (const auto& g : tree.gates()) order.push_back(g.id);
    for (int k = 0; k < 4; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      CutSetOptions options;
      options.elimination_order = order;
      c.expect(minimal_cut_sets(tree, "G0", options) == dnf,
               "elimination order changes result:\n" + serialize(tree));
    }
  }
}

void three_gate_system(Check& c) {
  auto tree = parse_tree(testing::kThreeGateNonLinear);
  auto system = equation_system(tree, "A");
  std::vector<Dnf> q0;
  for (auto g : system.members) q0.push_back(basic_part(tree, system.equations.at(g)));
  std::size_t dual_rows = 0;
  for (std::size_t index = 0; index < 4096; ++index) {
    Assignment a = assignment_from_index(12, index);
    auto report = enumerate_solutions(tree, a);
    auto least = eval_least_fixpoint(tree, a);
    c.expect(!report.solutions.empty() && report.least == least, "least != fixpoint");
    c.expect(std::find(report.solutions.begin(), report.solutions.end(), report.least) !=
                 report.solutions.end(),
             "pointwise minimum is not a solution");
    for (const auto& s : report.solutions) c.expect(report.least.leq(s), "least not below all");
    c.expect(report.solutions.size() == testing::oracle_solutions(tree, a.bits()).size(),
             "solution count differs from oracle");
    if (!report.has_dual()) continue;
    ++dual_rows;
    for (std::size_t g = 0; g < tree.gate_count(); ++g) {
      if (!report.dual[g]) continue;
      bool coefficient = evaluate(tree, q0[g], a, StateVector(tree.gate_count()));
      c.expect(!coefficient, "dual gate with TRUE basic-only coefficient at row " +
                                 std::to_string(index));
    }
  }
  c.expect(dual_rows > 0, "no dual rows found");
}

void four_gate_quoted(Check& c) {
  auto tree = parse_tree(testing::kFourGateLinear);
  Assignment a = tree.assignment(all_false_except(tree, {"Ad", "Dc", "Cb", "Db"}));
  auto report = enumerate_solutions(tree, a);
  auto oracle = testing::oracle_solutions(tree, a.bits());
  c.expect(oracle.size() == 1 && oracle[0] == std::vector<bool>(4, false), "oracle disagrees");
  c.expect(report.solutions.size() == 1 && report.solutions[0] == StateVector(4, false),
           "expected exactly one solution, all-FALSE");
  std::printf(
      "      note: A=TRUE does not satisfy the equations for this assignment; see README,\n"
      "      \"Known discrepancies\".\n");
}

void koon(Check& c) {
  Expr expanded = expand_koon(Expr::koon(2, {"G1", "G2", "G3"}));
  Expr expected = Expr::any_of({Expr::all_of({Expr::ref("G1"), Expr::ref("G2")}),
                                Expr::all_of({Expr::ref("G1"), Expr::ref("G3")}),
                                Expr::all_of({Expr::ref("G2"), Expr::ref("G3")})});
  c.expect(expanded == expected, "2-of-3 form");
  for (int n = 1; n <= 6; ++n) {
    std::vector<BasicEventDef> defs;
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) {
      ids.push_back("x" + std::to_string(i));
      defs.push_back(BasicEventDef{ids.back(), EventKind::NonRepairable, std::nullopt});
    }
    for (int k = 1; k <= n; ++k) {
      auto tree = build_tree(defs, {GateDef{"G", Expr::koon(k, ids)}}, {"G"});
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        auto bits = testing::bits_of(mask, static_cast<std::size_t>(n));
        int count = static_cast<int>(std::count(bits.begin(), bits.end(), true));
        c.expect(evaluate(tree.expanded_body(0), Assignment(bits), StateVector(1)) == (count >= k),
                 "threshold mismatch k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
  }
}

void quantification(Check& c) {
  auto acyclic = parse_tree(testing::kAcyclic);
  auto loop = parse_tree(testing::kTwoGateLoop);
  for (auto method : {QuantMethod::ExhaustiveEnumeration, QuantMethod::InclusionExclusion}) {
    c.expect(std::abs(top_probability(acyclic, "A", method).value - 0.109) <= 1e-12,
             "acyclic model != 0.109");
    c.expect(std::abs(top_probability(loop, "A", method).value - 0.109) <= 1e-12,
             "loop model != 0.109");
  }
  std::mt19937 rng(2026);
  testing::RandomTreeParams params;
  params.max_gates = 6;
  params.max_basics = 8;
  params.with_probabilities = true;
  int compared = 0;
  while (compared < 100) {
    auto tree = testing::random_tree(rng, params);
    if (minimal_cut_sets(tree, "G0").size() > kMaxInclusionExclusionCutSets) continue;
    double exact = top_probability(tree, "G0", QuantMethod::ExhaustiveEnumeration).value;
    double ie = top_probability(tree, "G0", QuantMethod::InclusionExclusion).value;
    double rare = top_probability(tree, "G0", QuantMethod::RareEventApprox).value;
    c.expect(std::abs(ie - exact) <= 1e-12, "inclusion-exclusion differs:\n" + serialize(tree));
    c.expect(rare >= exact - 1e-15, "rare-event below exact:\n" + serialize(tree));
    ++compared;
  }
}

void oscillation(Check& c) {
  auto tree = parse_tree(testing::kSwap);
  auto cycle = relax_from_state(tree, Assignment(), tree.state({{"P", true}, {"Q", false}}));
  c.expect(!cycle.is_fixpoint() && cycle.states.size() == 2, "(T,F) should give a 2-cycle");
  auto fixed = relax_from_state(tree, Assignment(), tree.state({{"P", true}, {"Q", true}}));
  c.expect(fixed.is_fixpoint() && fixed.fixpoint() == StateVector(2, true),
           "(T,T) should be a fixpoint");
}

}  // namespace

int main() {
  criterion(1, "state table of the single-gate ordinary loop", 1, table_one);
  criterion(2, "cut sets of the two-gate loop", 1, two_gate_cut_sets);
  criterion(3, "trajectory dependence with a repairable event", 1, dual_trajectories);
  criterion(4, "flip-order invariance and monotone traces", 60, flip_order_invariance);
  criterion(5, "cut sets vs fixpoint, elimination order", 120, oracle_equivalence);
  criterion(6, "three-gate non-linear system, all 4096 rows", 30, three_gate_system);
  criterion(7, "four-gate system, quoted assignment", 1, four_gate_quoted);
  criterion(8, "K-out-of-N expansion", 5, koon);
  criterion(9, "quantification", 30, quantification);
  criterion(10, "oscillation reporting", 1, oscillation);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
