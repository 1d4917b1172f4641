#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "ftloop/cutset.hpp"
#include "ftloop/loops.hpp"
#include "ftloop/quantify.hpp"
#include "ftloop/simulate.hpp"
#include "ftloop/solutions.hpp"
#include "ftloop/tree.hpp"

// JSON and CSV renderings shared by the command-line tool and the Python
// bindings. nlohmann::json keeps object keys sorted, so output is stable.
namespace ftloop::report {

using nlohmann::json;

json to_json(const FaultTree& tree, const Assignment& a);
json to_json(const FaultTree& tree, const StateVector& s);
json to_json(const SccReport& report);
json cut_sets_json(const FaultTree& tree, const Dnf& cut_sets);
json to_json(const FaultTree& tree, const RelaxResult& relax);
json to_json(const FaultTree& tree, const SolutionReport& report);
json to_json(const FaultTree& tree, const StateTable& table);
json to_json(const FaultTree& tree, const SimResult& sim);
json to_json(const QuantResult& result);

/// Header: basics, then `cand<i>` per candidate (+/-), `solutions`,
/// `least:<gate>` and `dual:<gate>` per gate. Booleans as 0/1.
std::string table_csv(const FaultTree& tree, const StateTable& table);

/// `{Aa}` / `{Ab,Bb}` lines; `FALSE` for no cut sets, `TRUE` for the empty one.
std::string cut_sets_text(const FaultTree& tree, const Dnf& cut_sets);

/// Parses "id=0,id=1,..." covering every basic event. Throws BadAssignment
/// or UnknownBasic.
Assignment parse_assignment(const FaultTree& tree, const std::string& text);

}  // namespace ftloop::report
