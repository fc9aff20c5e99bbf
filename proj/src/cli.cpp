#include "flownet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "flownet/cnf.hpp"
#include "flownet/decomp.hpp"
#include "flownet/degflow.hpp"
#include "flownet/error.hpp"
#include "flownet/gadgets.hpp"
#include "flownet/io.hpp"
#include "flownet/maxflow.hpp"
#include "flownet/oracle.hpp"
#include "flownet/persist.hpp"
#include "flownet/psplit.hpp"
#include "flownet/random.hpp"
#include "flownet/strongflow.hpp"
#include "flownet/tricot.hpp"

namespace flownet::cli {

namespace {

using nlohmann::json;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::string input = "-";
  std::string format = "json";
  bool dot = false;

  std::string read_input() const {
    std::ostringstream text;
    if (input == "-") {
      text << in.rdbuf();
    } else {
      std::ifstream file(input);
      if (!file) throw InputError("cannot open " + input);
      text << file.rdbuf();
    }
    return text.str();
  }
  Network network() const { return parse_network(read_input()); }

  void emit(const json& j, const Network* net = nullptr, const Flow* flow = nullptr) const {
    if (dot && net != nullptr) {
      out << to_dot(*net, flow);
      return;
    }
    if (format == "text") {
      for (const auto& [key, value] : j.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
      return;
    }
    out << j.dump(2) << '\n';
  }
};

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

Flow read_flow(const Network& net, const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("bad flow JSON: ") + e.what());
  }
  return flow_from_json(net, j);
}

// Flow given by --flow, or a maximum flow.
Flow flow_or_max(const Network& net, const std::string& path) {
  return path.empty() ? max_flow(net) : read_flow(net, path);
}

CnfFormula read_cnf(const Context& ctx, const std::string& path) {
  return parse_dimacs(path.empty() ? ctx.read_input() : read_file(path));
}

json ids(const std::vector<int>& v) { return json(v); }

json solution_json(const Network& net, const PSplitSolution& sol) {
  json j = flow_with_decomposition(net, sol.flow);
  j["paths"] = decomposition_to_json(FlowDecomposition{sol.paths});
  j["paths_used"] = sol.p_used;
  j["nu"] = sol.nu_star;
  j["i"] = sol.i_star;
  j["c"] = sol.c;
  return j;
}

json rational(const Rational& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

void write_gadget(const Context& ctx, const GadgetOutput& g, const std::string& labels_path) {
  if (!labels_path.empty()) {
    std::ofstream file(labels_path);
    if (!file) throw InputError("cannot write " + labels_path);
    file << gadget_to_json(g).dump(2) << '\n';
  }
  if (ctx.dot) {
    ctx.out << to_dot(g.network);
    return;
  }
  ctx.out << "# gadget " << gadget_to_json(g).dump() << '\n';
  write_network(ctx.out, g.network);
}

SplitVariant variant_of(const std::string& name) { return parse_split_variant(name); }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out};
  CLI::App app{"Flow algorithms with structural constraints on the support", "flownet"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-i,--input", ctx.input, "Input file ('-' for stdin)");
  app.add_option("--format", ctx.format, "Output mode")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--dot", ctx.dot, "Print the network (and flow) as Graphviz DOT");

  std::function<void()> action;
  auto bind = [&](CLI::App* sub, std::function<void()> body) {
    sub->callback([&action, body = std::move(body)] { action = body; });
  };

  std::string flow_path;
  int k = 1;
  std::optional<int> k_in;
  std::optional<Capacity> target;
  int p = 1;
  int q = 1;
  Capacity big_k = 1;
  std::string variant = "any";
  std::string mode = "vertex";
  bool use_oracle = false;
  bool vertex_mode = false;
  bool gadget_budget = false;
  double estimate_budget = TricotOptions{}.max_estimate;
  std::string cnf_path;
  std::string labels_path;
  int lambda = 3;
  std::string family = "rho1";
  bool negative = false;
  std::uint64_t seed = 1;
  RandomNetworkOptions random_opts;

  bind(app.add_subcommand("maxflow", "Maximum flow with its decomposition"), [&] {
    const Network net = ctx.network();
    const Flow f = max_flow(net);
    ctx.emit(flow_with_decomposition(net, f), &net, &f);
  });

  bind(app.add_subcommand("mincut", "Minimum cut and the arcs lying in some minimum cut"), [&] {
    const Network net = ctx.network();
    const Cut cut = min_cut(net);
    ctx.emit({{"value", cut.capacity},
              {"source_side", ids(cut.x)},
              {"arcs", ids(cut.arcs_across)},
              {"mincut_arcs", ids(mincut_arcs(net))}},
             &net);
  });

  bind(app.add_subcommand("lambda", "Arc connectivity from s to t"), [&] {
    const Network net = ctx.network();
    ctx.emit({{"lambda", arc_connectivity(net.digraph(), net.source(), net.sink())}}, &net);
  });

  auto* decompose_cmd = app.add_subcommand("decompose", "Path and cycle decomposition of a flow");
  decompose_cmd->add_option("--flow", flow_path, "Flow JSON (default: a maximum flow)");
  bind(decompose_cmd, [&] {
    const Network net = ctx.network();
    const Flow f = flow_or_max(net, flow_path);
    const FlowDecomposition dec = decompose(net, f);
    ctx.emit({{"value", f.value},
              {"paths", dec.path_count()},
              {"cycles", dec.cycle_count()},
              {"decomposition", decomposition_to_json(dec)}},
             &net, &f);
  });

  auto* acyclify_cmd = app.add_subcommand("acyclify", "Remove the cycle-flows of a flow");
  acyclify_cmd->add_option("--flow", flow_path, "Flow JSON (default: a maximum flow)");
  bind(acyclify_cmd, [&] {
    const Network net = ctx.network();
    const Flow f = acyclify(net, flow_or_max(net, flow_path));
    ctx.emit(flow_with_decomposition(net, f), &net, &f);
  });

  auto* degflow_cmd = app.add_subcommand("degflow", "Flow of value k+1 with out-degree <= k in its support");
  degflow_cmd->add_option("--k", k, "Out-degree bound")->required()->check(CLI::PositiveNumber);
  degflow_cmd->add_option("--target", target, "Flow value (only k+1 is supported)");
  degflow_cmd->add_flag("--oracle", use_oracle, "Compare against the exhaustive solver");
  bind(degflow_cmd, [&] {
    if (target && *target != k + 1) throw InputError("degflow decides value k+1 only");
    const Network net = ctx.network();
    const std::optional<Flow> f = deg_flow_value_k_plus_1(net, k);
    json j = {{"k", k}, {"target", k + 1}, {"feasible", f.has_value()}};
    if (f) {
      j.update(flow_with_decomposition(net, *f));
      j["support_out_degree"] = support_out_degree(net, *f);
    }
    if (use_oracle) {
      const Capacity best = oracle_deg_max_flow(net, k, std::nullopt, Budget::from_env());
      j["oracle_value"] = best;
      j["agrees"] = (best >= k + 1) == f.has_value();
    }
    ctx.emit(j, &net, f ? &*f : nullptr);
  });

  bind(app.add_subcommand("strong2", "Maximum flow whose support has two arc-disjoint s-t paths"), [&] {
    const Network net = ctx.network();
    const StrongFlowResult r = two_arc_strong_max_flow(net);
    json j = flow_with_decomposition(net, r.flow);
    j["support_lambda"] = arc_connectivity(support(net, r.flow), net.source(), net.sink());
    j["cut_arc_trace"] = r.cut_arc_trace;
    j["reroutings"] = static_cast<int>(r.cut_arc_trace.size()) - 1;
    ctx.emit(j, &net, &r.flow);
  });

  auto* psplit_cmd = app.add_subcommand("psplit", "1/H(p)-approximation for p-decomposable flows");
  psplit_cmd->add_option("--p", p, "Number of paths")->required()->check(CLI::PositiveNumber);
  psplit_cmd->add_option("--variant", variant, "any|arc|vertex");
  psplit_cmd->add_flag("--oracle", use_oracle, "Compare against the exhaustive solver");
  bind(psplit_cmd, [&] {
    const Network net = ctx.network();
    const SplitVariant v = variant_of(variant);
    const PSplitSolution sol = approx_p_split(net, p, v);
    json j = solution_json(net, sol);
    j["p"] = p;
    j["variant"] = to_string(v);
    j["harmonic"] = rational(harmonic(p));
    if (use_oracle) {
      const Capacity best = oracle_p_split(net, p, v, Budget::from_env());
      j["oracle_value"] = best;
      j["within_bound"] = within_harmonic_bound(sol.flow.value, best, p);
    }
    ctx.emit(j, &net, &sol.flow);
  });

  auto* tricot_cmd = app.add_subcommand("tricot", "Exact disjoint p-path flow on acyclic networks");
  tricot_cmd->add_option("--p", p, "Number of paths")->required()->check(CLI::PositiveNumber);
  tricot_cmd->add_option("--variant", variant, "vertex|arc")->check(CLI::IsMember({"vertex", "arc"}));
  tricot_cmd->add_option("--budget", estimate_budget, "Limit on the estimated number of states");
  tricot_cmd->add_flag("--oracle", use_oracle, "Compare against the exhaustive solver");
  bind(tricot_cmd, [&] {
    if (variant == "any") variant = "vertex";
    const Network net = ctx.network();
    const TricotOptions opts{estimate_budget};
    const PSplitSolution sol =
        variant == "arc" ? arc_disjoint_exact_acyclic(net, p, opts) : tricot_dp_exact(net, p, opts);
    json j = solution_json(net, sol);
    j["p"] = p;
    j["variant"] = variant;
    if (use_oracle) {
      const SplitVariant v = variant == "arc" ? SplitVariant::kArcDisjoint : SplitVariant::kVertexDisjoint;
      const Capacity best = oracle_p_split(net, p, v, Budget::from_env());
      j["oracle_value"] = best;
      j["agrees"] = best == sol.flow.value;
    }
    ctx.emit(j, &net, &sol.flow);
  });

  auto* persist_cmd = app.add_subcommand("persist", "Persistence of flows under arc deletions");
  persist_cmd->require_subcommand(1);
  auto* persist_eval = persist_cmd->add_subcommand("eval", "Persistence value of a given flow");
  persist_eval->add_option("--k", k, "Deleted arcs (vertices with --vertex)")->required()->check(CLI::NonNegativeNumber);
  persist_eval->add_option("--flow", flow_path, "Flow JSON")->required();
  persist_eval->add_flag("--vertex", vertex_mode, "Delete vertices instead of arcs");
  bind(persist_eval, [&] {
    const Network net = ctx.network();
    const Flow f = read_flow(net, flow_path);
    if (vertex_mode) {
      const VertexPersistenceReport r = vertex_persistence_value(net, f, k);
      ctx.emit({{"k", k}, {"value", f.value}, {"worst_set", ids(r.worst_set)}, {"residual_value", r.residual_value}});
    } else {
      const PersistenceReport r = persistence_value(net, f, k);
      ctx.emit({{"k", k}, {"value", f.value}, {"worst_set", ids(r.worst_set)}, {"residual_value", r.residual_value}});
    }
  });
  auto* persist_best = persist_cmd->add_subcommand("best", "Most persistent maximum flow by enumeration");
  persist_best->add_option("--k", k, "Deleted arcs (vertices with --vertex)")->required()->check(CLI::NonNegativeNumber);
  persist_best->add_flag("--vertex", vertex_mode, "Delete vertices instead of arcs");
  bind(persist_best, [&] {
    const Network net = ctx.network();
    json j;
    Flow f;
    if (vertex_mode) {
      const VertexPersistenceReport r = best_vertex_persistent_max_flow_bruteforce(net, k);
      f = r.flow;
      j = {{"worst_set", ids(r.worst_set)}, {"residual_value", r.residual_value}};
    } else {
      const PersistenceReport r = best_persistent_max_flow_bruteforce(net, k);
      f = r.flow;
      j = {{"worst_set", ids(r.worst_set)}, {"residual_value", r.residual_value}};
    }
    j.update(flow_with_decomposition(net, f));
    j["k"] = k;
    ctx.emit(j, &net, &f);
  });
  auto* persist_threshold = persist_cmd->add_subcommand("threshold", "Fewest arc deletions pushing the max flow below K");
  persist_threshold->add_option("--K", big_k, "Threshold")->required();
  bind(persist_threshold, [&] {
    const Network net = ctx.network();
    const ThresholdReport r = min_deletions_below(net, big_k);
    ctx.emit({{"K", big_k}, {"deletions", r.deletions}, {"arcs", ids(r.arcs)}});
  });

  auto* gadget_cmd = app.add_subcommand("gadget", "Generate a reduction or counterexample network");
  gadget_cmd->require_subcommand(1);
  gadget_cmd->add_option("--labels", labels_path, "Also write labels and metadata as JSON");
  auto* g_sat = gadget_cmd->add_subcommand("sat-deg", "3-SAT to out-degree-bounded flow");
  g_sat->add_option("--cnf", cnf_path, "DIMACS CNF file (default: input)");
  g_sat->add_option("--k", k, "Out-degree bound")->check(CLI::Range(2, 1000));
  bind(g_sat, [&] {
    if (k < 2) k = 2;
    write_gadget(ctx, gen_sat_deg_network(read_cnf(ctx, cnf_path), k), labels_path);
  });
  auto* g_value9 = gadget_cmd->add_subcommand("value9", "(3,B2)-SAT to a value-9 flow with out-degree <= 2");
  g_value9->add_option("--cnf", cnf_path, "DIMACS CNF file (default: input)");
  bind(g_value9, [&] { write_gadget(ctx, gen_b2sat_value9_network(read_cnf(ctx, cnf_path)), labels_path); });
  auto* g_lambda = gadget_cmd->add_subcommand("lambda", "Arc connectivity lambda, every max-flow support <= 2");
  g_lambda->add_option("--lambda", lambda, "Arc connectivity (>= 3)");
  bind(g_lambda, [&] { write_gadget(ctx, gen_lambda_counterexample(lambda), labels_path); });
  auto* g_psplit = gadget_cmd->add_subcommand("psplit", "Inapproximability family for p-decomposable flows");
  g_psplit->add_option("--p", p, "Number of paths")->required();
  g_psplit->add_option("--family", family, "rho1|rho2")->check(CLI::IsMember({"rho1", "rho2"}));
  g_psplit->add_flag("--negative", negative, "Use the negative toy linkage instance");
  bind(g_psplit, [&] {
    const PSplitFamily fam = family == "rho2" ? PSplitFamily::kRho2 : PSplitFamily::kRho1;
    write_gadget(ctx, gen_psplit_hard(p, toy_linkage(!negative), fam), labels_path);
  });
  auto* g_vertex = gadget_cmd->add_subcommand("vertex-disjoint", "3-SAT to vertex-disjoint path flows");
  g_vertex->add_option("--cnf", cnf_path, "DIMACS CNF file (default: input)");
  bind(g_vertex, [&] { write_gadget(ctx, gen_vertex_disjoint_hard(read_cnf(ctx, cnf_path)), labels_path); });
  auto* g_separable = gadget_cmd->add_subcommand("separable", "Vertex-disjoint to q-separable reduction of the input network");
  g_separable->add_option("--q", q, "Separability bound")->required();
  bind(g_separable, [&] { write_gadget(ctx, gen_separable_hard(ctx.network(), q), labels_path); });
  auto* g_tail = gadget_cmd->add_subcommand("inout-tail", "sat-deg network with the in-branching at t");
  g_tail->add_option("--cnf", cnf_path, "DIMACS CNF file (default: input)");
  bind(g_tail, [&] {
    write_gadget(ctx, gen_inout_tail(gen_sat_deg_network(read_cnf(ctx, cnf_path), 2)), labels_path);
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive solvers");
  oracle_cmd->require_subcommand(1);
  oracle_cmd->add_flag("--gadget-budget", gadget_budget, "Size limits loose enough for gadget networks");
  auto budget = [&] { return gadget_budget ? Budget::gadget() : Budget::from_env(); };
  auto* o_deg = oracle_cmd->add_subcommand("deg", "Max flow with bounded support degrees");
  o_deg->add_option("--k", k, "Out-degree bound")->required()->check(CLI::PositiveNumber);
  o_deg->add_option("--k-in", k_in, "In-degree bound")->check(CLI::PositiveNumber);
  bind(o_deg, [&] {
    const Network net = ctx.network();
    json j = {{"k", k}, {"value", oracle_deg_max_flow(net, k, k_in, budget())}};
    if (k_in) j["k_in"] = *k_in;
    ctx.emit(j);
  });
  auto* o_psplit = oracle_cmd->add_subcommand("psplit", "Best flow of at most p path-flows");
  o_psplit->add_option("--p", p, "Number of paths")->required()->check(CLI::PositiveNumber);
  o_psplit->add_option("--variant", variant, "any|arc|vertex");
  bind(o_psplit, [&] {
    const Network net = ctx.network();
    const SplitVariant v = variant_of(variant);
    ctx.emit({{"p", p}, {"variant", to_string(v)}, {"value", oracle_p_split(net, p, v, budget())}});
  });
  auto* o_sep = oracle_cmd->add_subcommand("separable", "Best q-separable flow");
  o_sep->add_option("--q", q, "Separability bound")->required()->check(CLI::PositiveNumber);
  o_sep->add_option("--mode", mode, "vertex|arc")->check(CLI::IsMember({"vertex", "arc"}));
  bind(o_sep, [&] {
    const Network net = ctx.network();
    const SeparableMode m = mode == "arc" ? SeparableMode::kArc : SeparableMode::kVertex;
    ctx.emit({{"q", q}, {"mode", mode}, {"value", oracle_q_separable(net, q, m, budget())}});
  });
  auto* o_enum = oracle_cmd->add_subcommand("enumerate-max-flows", "Every integer maximum flow");
  bind(o_enum, [&] {
    const Network net = ctx.network();
    json flows = json::array();
    int lo = -1;
    int hi = -1;
    enumerate_max_flows(net, [&](const Flow& f) {
      const int l = arc_connectivity(support(net, f), net.source(), net.sink());
      lo = lo < 0 ? l : std::min(lo, l);
      hi = std::max(hi, l);
      json entry = flow_to_json(f);
      entry["support_lambda"] = l;
      flows.push_back(std::move(entry));
    }, budget());
    ctx.emit({{"count", flows.size()},
              {"min_support_lambda", lo},
              {"max_support_lambda", hi},
              {"flows", flows}});
  });
  auto* o_unique = oracle_cmd->add_subcommand("unique-max-flow", "Whether the maximum flow is unique");
  bind(o_unique, [&] { ctx.emit({{"unique", max_flow_is_unique(ctx.network())}}); });
  auto* o_sat = oracle_cmd->add_subcommand("sat", "Satisfiability by enumeration");
  o_sat->add_option("--cnf", cnf_path, "DIMACS CNF file (default: input)");
  bind(o_sat, [&] { ctx.emit({{"satisfiable", sat_bruteforce(read_cnf(ctx, cnf_path))}}); });

  auto* random_cmd = app.add_subcommand("gen-random", "Seeded random network");
  random_cmd->add_option("--seed", seed, "Seed");
  random_cmd->add_option("--max-vertices", random_opts.max_vertices, "Largest vertex count")->check(CLI::Range(2, 100000));
  random_cmd->add_option("--max-arcs", random_opts.max_arcs, "Largest arc count")->check(CLI::PositiveNumber);
  random_cmd->add_option("--max-cap", random_opts.max_capacity, "Largest capacity")->check(CLI::PositiveNumber);
  random_cmd->add_flag("--acyclic", random_opts.acyclic, "Arcs go from lower to higher ids");
  random_cmd->add_flag("--unit", random_opts.unit, "Unit capacities");
  bind(random_cmd, [&] {
    const Network net = random_network(seed, random_opts);
    if (ctx.dot) {
      out << to_dot(net);
    } else {
      write_network(out, net);
    }
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  try {
    action();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace flownet::cli
