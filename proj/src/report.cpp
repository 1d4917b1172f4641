#include "ftloop/report.hpp"

#include <sstream>

#include "ftloop/error.hpp"

namespace ftloop::report {

namespace {

json flags(const FaultTree& tree, const std::vector<bool>& per_gate) {
  json out = json::object();
  for (std::size_t g = 0; g < tree.gate_count(); ++g) out[tree.gates()[g].id] = bool(per_gate[g]);
  return out;
}

}  // namespace

json to_json(const FaultTree& tree, const Assignment& a) {
  json out = json::object();
  for (const auto& [id, v] : tree.to_map(a)) out[id] = v;
  return out;
}

json to_json(const FaultTree& tree, const StateVector& s) {
  json out = json::object();
  for (const auto& [id, v] : tree.to_map(s)) out[id] = v;
  return out;
}

json to_json(const SccReport& report) {
  json components = json::array();
  for (const auto& c : report.components) {
    json entry = {{"members", c.members}, {"class", std::string(to_string(c.loop_class))}};
    if (c.diagnostic) entry["diagnostic"] = *c.diagnostic;
    components.push_back(std::move(entry));
  }
  return json{{"components", std::move(components)}};
}

json cut_sets_json(const FaultTree& tree, const Dnf& cut_sets) {
  json out = json::array();
  for (auto& set : cut_set_names(tree, cut_sets)) out.push_back(std::move(set));
  return out;
}

json to_json(const FaultTree& tree, const RelaxResult& relax) {
  json states = json::array();
  for (const auto& s : relax.states) states.push_back(to_json(tree, s));
  if (relax.is_fixpoint()) {
    return json{{"outcome", "Fixpoint"}, {"state", states.front()}, {"sweeps", relax.sweeps}};
  }
  return json{{"outcome", "Oscillation"}, {"cycle", std::move(states)}, {"sweeps", relax.sweeps}};
}

json to_json(const FaultTree& tree, const SolutionReport& report) {
  json solutions = json::array();
  for (const auto& s : report.solutions) solutions.push_back(to_json(tree, s));
  return json{{"assignment", to_json(tree, report.assignment)},
              {"solutions", std::move(solutions)},
              {"least", to_json(tree, report.least)},
              {"dual", flags(tree, report.dual)}};
}

json to_json(const FaultTree& tree, const StateTable& table) {
  json candidates = json::array();
  for (const auto& c : table.candidates) candidates.push_back(to_json(tree, c));
  json rows = json::array();
  for (const auto& row : table.rows) {
    json available = json::array();
    for (bool v : row.available) available.push_back(v);
    rows.push_back(json{{"assignment", to_json(tree, row.assignment)},
                        {"available", std::move(available)},
                        {"solution_count", row.solution_count},
                        {"least", to_json(tree, row.least)},
                        {"dual", flags(tree, row.dual)}});
  }
  return json{{"candidates", std::move(candidates)}, {"rows", std::move(rows)}};
}

json to_json(const FaultTree& tree, const SimResult& sim) {
  json timeline = json::array();
  for (const auto& step : sim.timeline) {
    json entry = to_json(tree, step.relax);
    entry["time"] = step.time;
    entry["assignment"] = to_json(tree, step.assignment);
    timeline.push_back(std::move(entry));
  }
  json out{{"timeline", std::move(timeline)}, {"oscillated", sim.oscillated}};
  out["final"] = sim.final_state ? to_json(tree, *sim.final_state) : json(nullptr);
  return out;
}

json to_json(const QuantResult& result) {
  json out{{"method", std::string(to_string(result.method))},
           {"value", result.value},
           {"clamped", result.clamped}};
  out["cutset_count"] = result.cutset_count ? json(*result.cutset_count) : json(nullptr);
  return out;
}

std::string table_csv(const FaultTree& tree, const StateTable& table) {
  std::ostringstream out;
  bool first = true;
  auto cell = [&](const std::string& text) {
    if (!first) out << ',';
    out << text;
    first = false;
  };
  for (const auto& b : tree.basics()) cell(b.id);
  for (std::size_t i = 0; i < table.candidates.size(); ++i) cell("cand" + std::to_string(i));
  cell("solutions");
  for (const auto& g : tree.gates()) cell("least:" + g.id);
  for (const auto& g : tree.gates()) cell("dual:" + g.id);
  out << '\n';
  for (const auto& row : table.rows) {
    first = true;
    for (std::size_t b = 0; b < tree.basic_count(); ++b) cell(row.assignment[b] ? "1" : "0");
    for (bool v : row.available) cell(v ? "+" : "-");
    cell(std::to_string(row.solution_count));
    for (std::size_t g = 0; g < tree.gate_count(); ++g) cell(row.least[g] ? "1" : "0");
    for (std::size_t g = 0; g < tree.gate_count(); ++g) cell(row.dual[g] ? "1" : "0");
    out << '\n';
  }
  return out.str();
}

std::string cut_sets_text(const FaultTree& tree, const Dnf& cut_sets) {
  if (cut_sets.is_false()) return "FALSE\n";
  if (cut_sets.is_true()) return "TRUE\n";
  std::string out;
  for (const auto& set : cut_set_names(tree, cut_sets)) {
    out += '{';
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i > 0) out += ',';
      out += set[i];
    }
    out += "}\n";
  }
  return out;
}

Assignment parse_assignment(const FaultTree& tree, const std::string& text) {
  std::map<std::string, bool> values;
  std::istringstream in(text);
  std::string pair;
  while (std::getline(in, pair, ',')) {
    auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 2 != pair.size() ||
        (pair[eq + 1] != '0' && pair[eq + 1] != '1')) {
      throw Error(ErrorCode::BadAssignment, "expected id=0 or id=1, got '" + pair + "'");
    }
    std::string id = pair.substr(0, eq);
    if (!values.emplace(id, pair[eq + 1] == '1').second) {
      throw Error(ErrorCode::BadAssignment, "basic event " + id + " assigned twice", id);
    }
  }
  return tree.assignment(values);
}

}  // namespace ftloop::report
