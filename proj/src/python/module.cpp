#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flownet/cli.hpp"
#include "flownet/cnf.hpp"
#include "flownet/degflow.hpp"
#include "flownet/error.hpp"
#include "flownet/gadgets.hpp"
#include "flownet/io.hpp"
#include "flownet/maxflow.hpp"
#include "flownet/oracle.hpp"
#include "flownet/psplit.hpp"
#include "flownet/strongflow.hpp"
#include "flownet/tricot.hpp"

namespace py = pybind11;
using namespace flownet;

namespace {

// Results cross the boundary as JSON text; the Python wrapper decodes them.
std::string solution_json(const Network& net, const PSplitSolution& sol) {
  nlohmann::json j = flow_with_decomposition(net, sol.flow);
  j["c"] = sol.c;
  j["nu"] = sol.nu_star;
  j["i"] = sol.i_star;
  return j.dump();
}

std::string gadget_json(const GadgetOutput& g) {
  nlohmann::json j = gadget_to_json(g);
  j["network"] = network_to_string(g.network);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_flownet, m) {
  m.doc() = "Flow algorithms with structural constraints on the support";

  // Translators registered later are tried first, so subclasses follow the
  // base class.
  const auto& error = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());

  py::class_<Network>(m, "Network")
      .def_static("parse", [](const std::string& text) { return parse_network(text); })
      .def("to_text", [](const Network& net) { return network_to_string(net); })
      .def_property_readonly("vertex_count", &Network::vertex_count)
      .def_property_readonly("arc_count", &Network::arc_count)
      .def_property_readonly("source", &Network::source)
      .def_property_readonly("sink", &Network::sink)
      .def_property_readonly("capacities", [](const Network& net) {
        return std::vector<Capacity>(net.capacities().begin(), net.capacities().end());
      })
      .def("arcs", [](const Network& net) {
        std::vector<std::pair<VertexId, VertexId>> out;
        for (ArcId a = 0; a < net.arc_count(); ++a) out.emplace_back(net.arc(a).tail, net.arc(a).head);
        return out;
      });

  m.def("max_flow", [](const Network& net) { return flow_with_decomposition(net, max_flow(net)).dump(); });
  m.def("arc_connectivity", [](const Network& net) {
    return arc_connectivity(net.digraph(), net.source(), net.sink());
  });
  m.def("deg_flow_value_k_plus_1", [](const Network& net, int k) -> std::optional<std::string> {
    const auto f = deg_flow_value_k_plus_1(net, k);
    if (!f) return std::nullopt;
    return flow_with_decomposition(net, *f).dump();
  });
  m.def("two_arc_strong_max_flow", [](const Network& net) {
    const StrongFlowResult r = two_arc_strong_max_flow(net);
    nlohmann::json j = flow_with_decomposition(net, r.flow);
    j["cut_arc_trace"] = r.cut_arc_trace;
    return j.dump();
  });
  m.def("approx_p_split", [](const Network& net, int p, const std::string& variant) {
    return solution_json(net, approx_p_split(net, p, parse_split_variant(variant)));
  });
  m.def("tricot", [](const Network& net, int p, const std::string& variant) {
    if (variant != "vertex" && variant != "arc") throw InputError("variant must be vertex or arc");
    return solution_json(net, variant == "arc" ? arc_disjoint_exact_acyclic(net, p) : tricot_dp_exact(net, p));
  });
  m.def("oracle_p_split", [](const Network& net, int p, const std::string& variant) {
    return oracle_p_split(net, p, parse_split_variant(variant), Budget::gadget());
  });
  m.def("oracle_deg_max_flow", [](const Network& net, int k) {
    return oracle_deg_max_flow(net, k, std::nullopt, Budget::gadget());
  });
  m.def("harmonic", [](int p) {
    const Rational r = harmonic(p);
    return std::make_pair(r.num, r.den);
  });
  m.def("gadget_lambda", [](int lambda) { return gadget_json(gen_lambda_counterexample(lambda)); });
  m.def("gadget_sat_deg", [](const std::string& dimacs, int k) {
    return gadget_json(gen_sat_deg_network(parse_dimacs(dimacs), k));
  });
  m.def("sat_bruteforce", [](const std::string& dimacs) { return sat_bruteforce(parse_dimacs(dimacs)); });

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("input") = "");
}
