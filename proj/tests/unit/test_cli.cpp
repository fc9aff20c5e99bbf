#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "flownet/cli.hpp"
#include "flownet/io.hpp"
#include "flownet/netcore.hpp"

using namespace flownet;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kSingleArc = "p flownet 2 1\ns 1\nt 2\na 1 2 5\n";
const std::string kCyclic = "p flownet 3 3\ns 1\nt 3\na 1 2 1\na 2 1 1\na 2 3 1\n";
// Parallel s-t arcs with capacities 3 and 1.
const std::string kParallel = "p flownet 2 2\ns 1\nt 2\na 1 2 3\na 1 2 1\n";

}  // namespace

TEST_CASE("maxflow, mincut and lambda") {
  const Result r = run({"maxflow"}, kSingleArc);
  CHECK(r.code == 0);
  CHECK(r.json()["value"] == 5);
  CHECK(run({"mincut"}, kSingleArc).json()["value"] == 5);
  CHECK(run({"lambda"}, kParallel).json()["lambda"] == 2);
  CHECK(run({"maxflow", "--format", "text"}, kSingleArc).out.find("value: 5") != std::string::npos);
  CHECK(run({"maxflow", "--dot"}, kSingleArc).out.find("digraph") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"tricot", "--p", "2"}, kCyclic).code == cli::kExitPrecondition);
  CHECK(run({"maxflow"}, "p flownet 2 1\ns 1\nt 2\na 1 2 0\n").code == cli::kExitInput);
  CHECK(run({"maxflow", "--bogus"}, kSingleArc).code == cli::kExitInput);
  CHECK(run({}, kSingleArc).code == cli::kExitInput);
  CHECK(run({"maxflow", "-i", "/nonexistent/file"}).code == cli::kExitInput);
  CHECK(run({"degflow", "--k", "2", "--target", "5"}, kSingleArc).code == cli::kExitInput);
  CHECK(run({"--help"}).code == cli::kExitOk);
  const Result budget = run({"tricot", "--p", "2", "--budget", "1"}, kParallel);
  CHECK(budget.code == cli::kExitBudget);
  CHECK(!budget.err.empty());
}

TEST_CASE("gadget pipelines") {
  for (int lambda = 3; lambda <= 5; ++lambda) {
    const Result g = run({"gadget", "lambda", "--lambda", std::to_string(lambda)});
    REQUIRE(g.code == 0);
    CHECK(run({"maxflow"}, g.out).json()["value"] == 2 * lambda - 2);
    CHECK(run({"lambda"}, g.out).json()["lambda"] == lambda);
    const nlohmann::json s = run({"strong2"}, g.out).json();
    CHECK(s["value"] == 2 * lambda - 2);
    CHECK(s["support_lambda"] == 2);
  }
  const Result g = run({"gadget", "psplit", "--p", "4"});
  CHECK(run({"oracle", "--gadget-budget", "psplit", "--p", "4"}, g.out).json()["value"] == 6);
  const Result sat = run({"gadget", "sat-deg"}, "p cnf 2 2\n1 2 -1 0\n-2 1 2 0\n");
  REQUIRE(sat.code == 0);
  CHECK(sat.out.rfind("# gadget ", 0) == 0);
  CHECK(run({"oracle", "--gadget-budget", "deg", "--k", "2"}, sat.out).json()["value"] == 7);
  CHECK(run({"gadget", "value9"}, "p cnf 1 1\n1 1 1 0\n").code == cli::kExitInput);
  const Result sep = run({"gadget", "separable", "--q", "2"}, "p flownet 3 2\ns 1\nt 3\na 1 2 2\na 2 3 1\n");
  CHECK(parse_network(sep.out).vertex_count() == 5);
}

TEST_CASE("solvers") {
  const nlohmann::json ps = run({"psplit", "--p", "2", "--oracle"}, kParallel).json();
  CHECK(ps["value"] == 3);
  CHECK(ps["oracle_value"] == 4);
  CHECK(ps["within_bound"] == true);
  CHECK(ps["harmonic"] == "3/2");
  const nlohmann::json tr = run({"tricot", "--p", "2", "--variant", "arc", "--oracle"}, kParallel).json();
  CHECK(tr["value"] == 4);
  CHECK(tr["agrees"] == true);
  const nlohmann::json dg = run({"degflow", "--k", "1", "--oracle"}, kParallel).json();
  CHECK(dg["feasible"] == true);
  CHECK(dg["agrees"] == true);
  CHECK(run({"decompose"}, kParallel).json()["paths"] == 2);
  CHECK(run({"acyclify"}, kCyclic).json()["value"] == 1);
  CHECK(run({"oracle", "sat"}, "p cnf 1 2\n1 0\n-1 0\n").json()["satisfiable"] == false);
  CHECK(run({"oracle", "unique-max-flow"}, kSingleArc).json()["unique"] == true);
}

TEST_CASE("persist subcommands") {
  const std::string net = "p flownet 3 3\ns 1\nt 3\na 1 2 2\na 2 3 1\na 2 3 5\n";
  const Result best = run({"persist", "best", "--k", "1"}, net);
  REQUIRE(best.code == 0);
  CHECK(best.json()["residual_value"] == 1);
  const std::string path = "/tmp/flownet_cli_test_flow.json";
  {
    std::ofstream file(path);
    file << R"({"flow": [{"arc": 0, "x": 2}, {"arc": 2, "x": 2}]})";
  }
  CHECK(run({"persist", "eval", "--k", "1", "--flow", path}, net).json()["residual_value"] == 0);
  CHECK(run({"persist", "threshold", "--K", "1"}, net).json()["deletions"] == 1);
  CHECK(run({"persist"}, net).code == cli::kExitInput);
}

TEST_CASE("random generation is deterministic") {
  const Result a = run({"gen-random", "--seed", "11", "--acyclic"});
  const Result b = run({"gen-random", "--seed", "11", "--acyclic"});
  CHECK(a.out == b.out);
  CHECK(is_acyclic(parse_network(a.out).digraph()));
  CHECK(run({"maxflow"}, a.out).out == run({"maxflow"}, b.out).out);
}

TEST_CASE("flow outputs round-trip through the validator") {
  const std::string text = run({"gen-random", "--seed", "5", "--max-cap", "4"}).out;
  const Network net = parse_network(text);
  const std::vector<std::vector<std::string>> commands = {
      {"maxflow"}, {"acyclify"}, {"psplit", "--p", "3"}, {"psplit", "--p", "2", "--variant", "vertex"},
      {"degflow", "--k", "2"}};
  for (const auto& args : commands) {
    const Result r = run(args, text);
    REQUIRE(r.code == 0);
    const nlohmann::json j = r.json();
    if (!j.contains("flow")) continue;
    CHECK(flow_from_json(net, j).value == j["value"]);
  }
  const Result again = run({"psplit", "--p", "3"}, text);
  CHECK(again.out == run({"psplit", "--p", "3"}, text).out);
}
