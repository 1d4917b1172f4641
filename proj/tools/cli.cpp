#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ftloop/cutset.hpp"
#include "ftloop/error.hpp"
#include "ftloop/fixpoint.hpp"
#include "ftloop/loops.hpp"
#include "ftloop/parser.hpp"
#include "ftloop/quantify.hpp"
#include "ftloop/report.hpp"
#include "ftloop/simulate.hpp"
#include "ftloop/solutions.hpp"

namespace ftloop::cli {

namespace {

using report::json;

// Largest table that --candidates will expand to every gate state.
constexpr std::size_t kMaxCandidateGates = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

std::size_t product_cap(const CliConfig& config) {
  if (config.product_cap) return *config.product_cap;
  if (const char* env = std::getenv("FT_PRODUCT_CAP")) {
    std::string_view text(env);
    std::size_t cap = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc() || ptr != text.data() + text.size() || cap == 0) {
      throw UsageError("FT_PRODUCT_CAP must be a positive integer");
    }
    return cap;
  }
  return kDefaultProductCap;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::TooManyLoopGates:
    case ErrorCode::TooManyBasics:
    case ErrorCode::TooLarge:
      return kCapExceeded;
    case ErrorCode::BadAssignment:
    case ErrorCode::UnknownGate:
      return kUsage;
    default:
      return kAnalysis;
  }
}

void emit(std::ostream& out, const json& value) { out << value.dump(2) << '\n'; }

std::string bits_text(const std::map<std::string, bool>& values) {
  std::string line;
  for (const auto& [id, v] : values) {
    if (!line.empty()) line += ' ';
    line += id + (v ? "=1" : "=0");
  }
  return line;
}

void run_validate(const FaultTree& tree, const CliConfig& config, std::ostream& out) {
  if (config.format == Format::Text) {
    out << "valid: " << tree.basic_count() << " basic events, " << tree.gate_count()
        << " gates, tops";
    for (const auto& t : tree.tops()) out << ' ' << t;
    out << '\n';
    return;
  }
  emit(out, json{{"valid", true},
                 {"basics", tree.basic_count()},
                 {"gates", tree.gate_count()},
                 {"tops", tree.tops()}});
}

void run_loops(const FaultTree& tree, const CliConfig& config, std::ostream& out) {
  auto scc = analyze_structure(tree, product_cap(config));
  if (config.format == Format::Text) {
    for (const auto& c : scc.components) {
      out << to_string(c.loop_class) << ':';
      for (const auto& m : c.members) out << ' ' << m;
      if (c.diagnostic) out << " (" << *c.diagnostic << ')';
      out << '\n';
    }
    return;
  }
  emit(out, report::to_json(scc));
}

void run_eval(const FaultTree& tree, const CliConfig& config, std::ostream& out) {
  if (config.assign.empty()) throw UsageError("eval requires --assign");
  Assignment a = report::parse_assignment(tree, config.assign);
  StateVector s = eval_least_fixpoint(tree, a);
  if (config.format == Format::Text) {
    out << bits_text(tree.to_map(s)) << '\n';
    return;
  }
  emit(out, json{{"assignment", report::to_json(tree, a)}, {"gates", report::to_json(tree, s)}});
}

void run_mcs(const FaultTree& tree, const CliConfig& config, std::ostream& out) {
  if (config.top.empty()) throw UsageError("mcs requires --top");
  CutSetOptions options;
  options.product_cap = product_cap(config);
  Dnf cut_sets = minimal_cut_sets(tree, config.top, options);
  if (config.format == Format::Text) {
    out << report::cut_sets_text(tree, cut_sets);
    return;
  }
  emit(out, report::cut_sets_json(tree, cut_sets));
}

void run_solutions(const FaultTree& tree, const CliConfig& config, std::ostream& out) {
  if (config.assign.empty()) throw UsageError("solutions requires --assign");
  auto result = enumerate_solutions(tree, report::parse_assignment(tree, config.assign));
  if (config.format == Format::Text) {
    for (const auto& s : result.solutions) out << "solution: " << bits_text(tree.to_map(s)) << '\n';
    out << "least: " << bits_text(tree.to_map(result.least)) << '\n';
    out << "dual:";
    for (std::size_t g = 0; g < tree.gate_count(); ++g) {
      if (result.dual[g]) out << ' ' << tree.gates()[g].id;
    }
    out << '\n';
    return;
  }
  emit(out, report::to_json(tree, result));
}

void run_table(const FaultTree& tree, const CliConfig& config, std::ostream& out) {
  std::optional<std::vector<StateVector>> candidates;
  if (config.candidates) {
    if (tree.gate_count() > kMaxCandidateGates) {
      throw Error(ErrorCode::TooLarge, std::to_string(tree.gate_count()) +
                                           " gates are too many to list every candidate state");
    }
    candidates = all_states(tree.gate_count());
  }
  auto table = build_state_table(tree, candidates, config.threads);
  if (config.format == Format::Csv) {
    out << report::table_csv(tree, table);
    return;
  }
  if (config.format == Format::Text) {
    std::string csv = report::table_csv(tree, table);
    for (char& c : csv) {
      if (c == ',') c = '\t';
    }
    out << csv;
    return;
  }
  emit(out, report::to_json(tree, table));
}

void run_simulate(const FaultTree& tree, const CliConfig& config, std::istream& in,
                  std::ostream& out) {
  if (config.trajectory.empty()) throw UsageError("simulate requires --trajectory");
  auto traj = parse_trajectory(read_source(config.trajectory, in));
  auto sim = simulate(tree, traj);
  if (config.format == Format::Text) {
    for (const auto& step : sim.timeline) {
      out << "t=" << step.time << " sweeps=" << step.relax.sweeps << ' ';
      if (step.relax.is_fixpoint()) {
        out << bits_text(tree.to_map(step.relax.fixpoint()));
      } else {
        out << "oscillation(" << step.relax.states.size() << ")";
      }
      out << '\n';
    }
    out << "final: "
        << (sim.final_state ? bits_text(tree.to_map(*sim.final_state)) : std::string("none"))
        << '\n';
    return;
  }
  emit(out, report::to_json(tree, sim));
}

void run_quantify(const FaultTree& tree, const CliConfig& config, std::ostream& out) {
  if (config.top.empty()) throw UsageError("quantify requires --top");
  auto method = parse_quant_method(config.method);
  if (!method) throw UsageError("unknown method " + config.method);
  auto result = top_probability(tree, config.top, *method, product_cap(config));
  if (config.format == Format::Text) {
    out << to_string(result.method) << ' ' << json(result.value).dump()
        << (result.clamped ? " (clamped)" : "") << '\n';
    return;
  }
  json j = report::to_json(result);
  j["top"] = config.top;
  emit(out, j);
}

}  // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.format == Format::Csv && config.subcommand != "table") {
      throw UsageError("csv output is only available for table");
    }
    if (config.input == "-" && config.trajectory == "-") {
      throw UsageError("model and trajectory cannot both come from stdin");
    }
    FaultTree tree = parse_tree(read_source(config.input, in));
    std::ostringstream buffer;
    const auto& cmd = config.subcommand;
    if (cmd == "validate") run_validate(tree, config, buffer);
    else if (cmd == "loops") run_loops(tree, config, buffer);
    else if (cmd == "eval") run_eval(tree, config, buffer);
    else if (cmd == "mcs") run_mcs(tree, config, buffer);
    else if (cmd == "solutions") run_solutions(tree, config, buffer);
    else if (cmd == "table") run_table(tree, config, buffer);
    else if (cmd == "simulate") run_simulate(tree, config, in, buffer);
    else if (cmd == "quantify") run_quantify(tree, config, buffer);
    else throw UsageError("unknown subcommand " + cmd);
    out << buffer.str();
    return kOk;
  } catch (const UsageError& e) {
    err << "error: Usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << '\n';
    return kAnalysis;
  }
}

int main_entry(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Fault tree analysis for models with logical loops", "ftloop"};
  app.require_subcommand(1);
  CliConfig config;
  std::string format = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Model file, or - for stdin")->required();
    sub->add_option("--format", format, "json, text or csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));
  };
  auto cap = [&](CLI::App* sub) {
    sub->add_option("--cap", config.product_cap,
                    "Product cap for sum-of-products work (default: FT_PRODUCT_CAP or 100000)")
        ->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate a model");
  common(validate);
  auto* loops = app.add_subcommand("loops", "Strongly connected components and loop classes");
  common(loops);
  cap(loops);
  auto* eval = app.add_subcommand("eval", "Least fixed point for one assignment");
  common(eval);
  eval->add_option("--assign", config.assign, "id=0|1,... for every basic event")->required();
  auto* mcs = app.add_subcommand("mcs", "Minimal cut sets of a gate");
  common(mcs);
  cap(mcs);
  mcs->add_option("--top", config.top, "Target gate")->required();
  auto* solutions = app.add_subcommand("solutions", "All consistent gate states");
  common(solutions);
  solutions->add_option("--assign", config.assign, "id=0|1,... for every basic event")
      ->required();
  auto* table = app.add_subcommand("table", "State table over every assignment");
  common(table);
  table->add_flag("--candidates", config.candidates, "Mark every gate state as available or not");
  table->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* sim = app.add_subcommand("simulate", "Replay a basic-event trajectory");
  common(sim);
  sim->add_option("--trajectory", config.trajectory, "CSV file time,basic_id,value")->required();
  auto* quant = app.add_subcommand("quantify", "TOP probability");
  common(quant);
  cap(quant);
  quant->add_option("--top", config.top, "Target gate")->required();
  quant->add_option("--method", config.method, "enumeration, inclusion-exclusion or rare-event")
      ->check(CLI::IsMember({"enumeration", "inclusion-exclusion", "rare-event"}));

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: Usage: " << e.what() << '\n';
    return kUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "text" ? Format::Text : format == "csv" ? Format::Csv : Format::Json;
  return run(config, in, out, err);
}

}  // namespace ftloop::cli
