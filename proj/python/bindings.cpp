#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace ftloop;
using Values = std::map<std::string, bool>;

namespace {

// Reports are built once as JSON and handed over as plain dicts and lists.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

PyObject* error_type = nullptr;

QuantMethod method_from(const std::string& name) {
  auto m = parse_quant_method(name);
  if (!m) throw py::value_error("unknown method " + name);
  return *m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fault tree analysis for models with logical loops";

  static py::exception<Error> exc(m, "FtloopError", PyExc_ValueError);
  error_type = exc.ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      inst.attr("detail") = e.detail();
      inst.attr("line") = e.line();
      inst.attr("column") = e.column();
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  py::class_<FaultTree>(m, "FaultTree")
      .def_property_readonly("basics",
                             [](const FaultTree& t) {
                               std::vector<std::string> ids;
                               for (const auto& b : t.basics()) ids.push_back(b.id);
                               return ids;
                             })
      .def_property_readonly("gates",
                             [](const FaultTree& t) {
                               std::vector<std::string> ids;
                               for (const auto& g : t.gates()) ids.push_back(g.id);
                               return ids;
                             })
      .def_property_readonly("tops", &FaultTree::tops)
      .def("serialize", [](const FaultTree& t) { return serialize(t); })
      .def("__eq__", [](const FaultTree& a, const FaultTree& b) { return a == b; })
      .def("__repr__", [](const FaultTree& t) {
        std::ostringstream out;
        out << "<FaultTree " << t.basic_count() << " basics, " << t.gate_count() << " gates>";
        return out.str();
      });

  m.def("parse_tree", &parse_tree, py::arg("text"));

  m.def(
      "analyze_structure",
      [](const FaultTree& t, std::size_t cap) { return to_python(report::to_json(analyze_structure(t, cap))); },
      py::arg("tree"), py::arg("cap") = kDefaultProductCap);

  m.def(
      "eval_least_fixpoint",
      [](const FaultTree& t, const Values& a) {
        return t.to_map(eval_least_fixpoint(t, t.assignment(a)));
      },
      py::arg("tree"), py::arg("assignment"));

  m.def(
      "relax",
      [](const FaultTree& t, const Values& a, const Values& start) {
        return to_python(report::to_json(t, relax_from_state(t, t.assignment(a), t.state(start))));
      },
      py::arg("tree"), py::arg("assignment"), py::arg("start"));

  m.def(
      "minimal_cut_sets",
      [](const FaultTree& t, const std::string& top, std::size_t cap,
         std::vector<std::string> order) {
        CutSetOptions options;
        options.product_cap = cap;
        options.elimination_order = std::move(order);
        return cut_set_names(t, minimal_cut_sets(t, top, options));
      },
      py::arg("tree"), py::arg("top"), py::arg("cap") = kDefaultProductCap,
      py::arg("elimination_order") = std::vector<std::string>{});

  m.def(
      "enumerate_solutions",
      [](const FaultTree& t, const Values& a) {
        return to_python(report::to_json(t, enumerate_solutions(t, t.assignment(a))));
      },
      py::arg("tree"), py::arg("assignment"));

  m.def(
      "state_table",
      [](const FaultTree& t, bool candidates, unsigned threads) {
        std::optional<std::vector<StateVector>> cands;
        if (candidates) cands = all_states(t.gate_count());
        return to_python(report::to_json(t, build_state_table(t, cands, threads)));
      },
      py::arg("tree"), py::arg("candidates") = false, py::arg("threads") = 1);

  m.def(
      "simulate",
      [](const FaultTree& t, const std::string& trajectory) {
        return to_python(report::to_json(t, simulate(t, parse_trajectory(trajectory))));
      },
      py::arg("tree"), py::arg("trajectory"),
      "Replays a trajectory given as CSV text (time,basic_id,value per line).");

  m.def(
      "top_probability",
      [](const FaultTree& t, const std::string& top, const std::string& method, std::size_t cap) {
        return to_python(report::to_json(top_probability(t, top, method_from(method), cap)));
      },
      py::arg("tree"), py::arg("top"), py::arg("method") = "enumeration",
      py::arg("cap") = kDefaultProductCap);

  m.def(
      "expand_koon",
      [](int k, const std::vector<std::string>& inputs) {
        return serialize(expand_koon(Expr::koon(k, inputs)));
      },
      py::arg("k"), py::arg("inputs"));
}
