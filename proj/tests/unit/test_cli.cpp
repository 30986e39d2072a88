#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "eulerwalk/cli.hpp"

using namespace eulerwalk;
using namespace eulerwalk::cli;
using nlohmann::json;

namespace {

RunConfig parse(std::vector<const char*> args) {
  args.insert(args.begin(), "eulerwalk");
  std::ostringstream help;
  auto c = parse_args(static_cast<int>(args.size()), args.data(), help);
  REQUIRE(c.has_value());
  return *c;
}

struct Result {
  int status;
  std::string out, err;
};

Result execute(const RunConfig& c) {
  std::ostringstream out, err;
  const int status = run(c, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("argument parsing") {
  const RunConfig c = parse({"delta-dist", "--torus", "12x10", "--order", "cross", "--samples", "5", "--seed", "7"});
  CHECK(c.command == Command::DeltaDist);
  REQUIRE(c.lattice.has_value());
  CHECK(c.lattice->topology == Lattice::Topology::Torus);
  CHECK(c.lattice->width == 12);
  CHECK(c.lattice->height == 10);
  CHECK(c.order == "cross");
  CHECK(c.samples == 5);
  CHECK(c.seed == 7);

  const RunConfig m = parse({"msd", "--torus", "20x20", "--window", "2:15", "--t-max", "30"});
  CHECK(m.window_first == 2);
  CHECK(m.window_last == 15);
  CHECK(m.t_max == 30);

  const RunConfig g = parse({"green", "2", "-3", "--tol", "1e-10"});
  CHECK(g.p == 2);
  CHECK(g.q == -3);
  CHECK(g.tolerance == 1e-10);

  const RunConfig p = parse({"planar-check", "--grid", "12x12"});
  CHECK(p.lattice->topology == Lattice::Topology::PlanarGrid);
}

TEST_CASE("usage errors") {
  std::ostringstream sink;
  auto fails = [&](std::vector<const char*> args) {
    args.insert(args.begin(), "eulerwalk");
    CHECK_THROWS_AS(parse_args(static_cast<int>(args.size()), args.data(), sink), InputError);
  };
  fails({});
  fails({"delta-dist", "--torus", "2x9"});
  fails({"delta-dist", "--torus", "9x"});
  fails({"delta-dist", "--torus", "9x9", "--samples", "0"});
  fails({"delta-dist", "--torus", "9x9", "--order", "zigzag"});
  fails({"delta-dist", "--torus", "9x9", "--grid", "9x9"});
  fails({"msd", "--torus", "9x9", "--window", "5"});
  fails({"msd", "--torus", "9x9", "--window", "5:5"});
  fails({"green", "1"});
  fails({"green", "1", "1", "--tol", "0"});
  fails({"predict", "--format", "xml"});

  RunConfig c;
  c.command = Command::DeltaDist;
  CHECK(execute(c).status == kExitUsage);  // no lattice
  c.lattice = LatticeSpec{Lattice::Topology::PlanarGrid, 5, 5};
  const Result r = execute(c);
  CHECK(r.status == kExitUsage);
  CHECK(r.err.find("torus") != std::string::npos);
}

TEST_CASE("help prints and returns nothing") {
  const char* argv[] = {"eulerwalk", "--help"};
  std::ostringstream out;
  CHECK_FALSE(parse_args(2, argv, out).has_value());
  CHECK(out.str().find("delta-dist") != std::string::npos);
}

TEST_CASE("green and predict outputs") {
  Result r = execute(parse({"green", "1", "1"}));
  CHECK(r.status == kExitOk);
  json j = json::parse(r.out);
  CHECK(j["results"]["g"].get<double>() == doctest::Approx(-0.3183098861837907).epsilon(1e-12));
  CHECK(j["config"]["p"] == 1);

  r = execute(parse({"predict", "--order", "cross"}));
  j = json::parse(r.out);
  CHECK(j["pdd"].get<double>() == doctest::Approx(0.22416187).epsilon(1e-7));
  CHECK(j["source"] == "analytic");
  CHECK_FALSE(j.contains("pd"));

  r = execute(parse({"predict", "--order", "clockwise", "--torus", "16x16", "--format", "csv"}));
  CHECK(r.out.rfind("observable,predicted\npd,0.498046875\n", 0) == 0);
}

TEST_CASE("summaries embed the configuration") {
  const RunConfig c = parse({"delta-dist", "--torus", "6x6", "--samples", "10", "--seed", "3"});
  const json j = json::parse(execute(c).out);
  CHECK(j["config"] == to_json(c));
  CHECK(j["seed"] == 3);
  CHECK(j["n_samples"] == 10);
  CHECK(j["command"] == "delta-dist");
  CHECK_FALSE(j["config"].contains("threads"));
}

TEST_CASE("outputs do not depend on the thread count") {
  for (const char* cmd : {"delta-dist", "correlations", "msd", "conjecture"}) {
    RunConfig c = parse({cmd, "--torus", "8x8", "--samples", "12", "--seed", "9"});
    CAPTURE(cmd);
    c.threads = 1;
    const Result one = execute(c);
    c.threads = 5;
    const Result five = execute(c);
    CHECK(one.status == five.status);
    CHECK(one.out == five.out);
    c.format = "csv";
    const std::string csv = execute(c).out;
    c.threads = 1;
    CHECK(csv == execute(c).out);
    CHECK(csv.find('\r') == std::string::npos);
  }
}

TEST_CASE("compare") {
  const json predicted = {{"pdd", 0.2}, {"pdc", 0.3}};
  json empirical = {{"observables", {{"pdd", {{"value", 0.2}, {"se", 0.0}}}, {"pdc", {{"value", 0.31}, {"se", 0.005}}}}}};
  auto rows = compare(empirical, predicted);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].observable == "pdd");
  CHECK(rows[0].z == 0);
  CHECK(rows[0].passed);
  CHECK(rows[1].z == doctest::Approx(2.0));
  CHECK(rows[1].passed);

  empirical["observables"]["pdc"]["value"] = 0.33;
  rows = compare(empirical, predicted);
  CHECK(rows[1].z == doctest::Approx(6.0));
  CHECK_FALSE(rows[1].passed);

  CHECK_THROWS_AS(compare(empirical, json{{"pcc", 0.2}}), InputError);
  CHECK_THROWS_AS(compare(json{{"x", 1}}, predicted), InputError);
  CHECK_THROWS_AS(compare(empirical, json{{"unrelated", 1}}), InputError);
}

TEST_CASE("wrong routing pairing is flagged") {
  // Cross-routing tours on Torus(32,32): 300 tours, about 1.2e6 pair events.
  RunConfig c = parse({"correlations", "--torus", "32x32", "--order", "cross", "--samples", "300", "--seed", "4"});
  const json empirical = json::parse(execute(c).out);
  const json cross = json::parse(execute(parse({"predict", "--order", "cross"})).out);
  const json clockwise = json::parse(execute(parse({"predict", "--order", "clockwise"})).out);

  for (const auto& row : compare(empirical, cross)) CHECK(row.passed);
  bool flagged = false;
  for (const auto& row : compare(empirical, clockwise)) flagged = flagged || !row.passed;
  CHECK(flagged);
}
