#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mudeg/checks.hpp"
#include "mudeg/cli.hpp"
#include "mudeg/errors.hpp"
#include "mudeg/expr.hpp"
#include "mudeg/mindeg.hpp"
#include "mudeg/presentation.hpp"
#include "mudeg/report.hpp"

namespace py = pybind11;
using namespace mudeg;

namespace {

Limits make_limits(std::size_t max_order, std::size_t max_subgroups, std::size_t max_cosets) {
  return Limits{max_order, max_subgroups, max_cosets};
}

PermGroup group_within(const std::string& text, const Limits& limits) {
  const GroupExpr e = parse_group(text);
  if (expected_order(e) > limits.max_order)
    throw CapExceeded("element", limits.max_order, to_string(e) + " has order " + std::to_string(expected_order(e)));
  return build_group(e);
}

}  // namespace

PYBIND11_MODULE(_mudeg, m) {
  m.doc() = "Minimal faithful permutation degrees of small groups";

  static py::exception<CapExceeded> cap_error(m, "CapExceededError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapExceeded& e) {
      cap_error(e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const SemanticError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("canonical", [](const std::string& text) { return to_string(parse_group(text)); },
        "Canonical form of a group expression.");

  m.def("order", [](const std::string& text) { return build_group(parse_group(text)).order(); });

  m.def(
      "mu_json",
      [](const std::string& text, std::size_t max_order, std::size_t max_subgroups) {
        const Limits limits = make_limits(max_order, max_subgroups, kDefaultMaxCosets);
        const PermGroup g = group_within(text, limits);
        const MuResult r = mu_exact(g, limits);
        return nlohmann::json{{"mu", r.value}, {"certificate", to_json(r.certificate)}}.dump();
      },
      py::arg("expression"), py::arg("max_order") = kDefaultMaxOrder,
      py::arg("max_subgroups") = kDefaultMaxSubgroups);

  m.def(
      "lattice_json",
      [](const std::string& text, std::size_t max_order, std::size_t max_subgroups) {
        const Limits limits = make_limits(max_order, max_subgroups, kDefaultMaxCosets);
        const PermGroup g = group_within(text, limits);
        auto table = std::make_shared<const ElementTable>(enumerate_elements(g, limits.max_order));
        const SubgroupLattice lat = all_subgroups(table, limits.max_subgroups);
        nlohmann::json by_order = nlohmann::json::object();
        for (const auto& [o, c] : lat.count_by_order()) by_order[std::to_string(o)] = c;
        nlohmann::json normal = nlohmann::json::array(), minimal = nlohmann::json::array();
        for (auto id : lat.normal_subgroups()) normal.push_back(lat[id].order);
        for (auto id : lat.minimal_normal_subgroups()) minimal.push_back(lat[id].order);
        return nlohmann::json{{"order", table->size()},
                              {"subgroups", lat.size()},
                              {"classes", lat.class_count()},
                              {"by_order", by_order},
                              {"normal_orders", normal},
                              {"minimal_normal_orders", minimal}}
            .dump();
      },
      py::arg("expression"), py::arg("max_order") = kDefaultMaxOrder,
      py::arg("max_subgroups") = kDefaultMaxSubgroups);

  m.def(
      "coset_enumeration",
      [](const std::string& text, std::size_t max_cosets) {
        const PresentationFile f = parse_presentation(text);
        const Enumeration e = todd_coxeter(f.presentation, f.subgroup, max_cosets);
        return py::make_tuple(e.index, e.cosets_defined);
      },
      py::arg("text"), py::arg("max_cosets") = kDefaultMaxCosets,
      "Index of the subgroup in the presented group and the number of cosets defined.");

  m.def(
      "verify_json",
      [](const std::string& fault) {
        VerificationOptions options;
        options.fault = fault;
        return make_report("verify-paper", nlohmann::json::object(), run_verification_suite(options), false).dump();
      },
      py::arg("fault") = "");

  m.def("compose", [](const std::vector<Point>& p, const std::vector<Point>& q) {
    return compose(Permutation(p), Permutation(q)).images();
  });
  m.def("element_order", [](const std::vector<Point>& p) { return element_order(Permutation(p)); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
