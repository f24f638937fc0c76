#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "kg/config.hpp"
#include "kg/runner.hpp"
#include "kg/scenarios.hpp"
#include "kg/sweep.hpp"

using namespace kg;
using nlohmann::json;

namespace {

std::string minimal_config_text() {
  return R"({
    "run_id": "t",
    "epsilon": 2.0,
    "t0": 1.0,
    "background": {"kind": "minkowski", "n": 3, "m": 1.0},
    "nonlinearity": {"kind": "focusing_power", "p": 3.0},
    "grid": {"geometry": "radial", "n": 3, "radius": 4.0, "points": 64},
    "initial": {"A": 1.0, "B": 1.0, "rho": 1.0},
    "solver": {"t_end": 3.5}
  })";
}

} // namespace

TEST_CASE("config parses the five blocks plus epsilon and t0") {
  const RunConfig cfg = parse_config_text(minimal_config_text());
  CHECK(cfg.run_id == "t");
  CHECK(cfg.epsilon == 2.0);
  REQUIRE(cfg.t0.has_value());
  CHECK(*cfg.t0 == 1.0);
  CHECK(cfg.bg().kind() == BackgroundModel::Kind::Minkowski);
  CHECK(cfg.nl().kind() == NonlinearitySpec::Kind::FocusingPower);
  CHECK(cfg.grid.geometry == GridSpec::Geometry::RadialND);
  CHECK(cfg.grid.points == 64);
  CHECK(cfg.initial.A == 1.0);
  CHECK(cfg.solver.t_end == 3.5);
  CHECK(cfg.solver.cfl == 0.5); // default
}

TEST_CASE("config round-trips through JSON") {
  for (const auto& sc : built_in_scenarios()) {
    const json j = config_to_json(sc.config);
    const RunConfig back = parse_config(j);
    CHECK(config_to_json(back) == j);
  }
}

TEST_CASE("missing keys produce anchored error messages") {
  json j = json::parse(minimal_config_text());
  j.erase("epsilon");
  CHECK_THROWS_WITH_AS((void)parse_config(j),
                       "config: top level: missing key 'epsilon'",
                       std::invalid_argument);
  j = json::parse(minimal_config_text());
  j["background"].erase("m");
  CHECK_THROWS_WITH_AS((void)parse_config(j),
                       "config: background: missing key 'm'", std::invalid_argument);
}

TEST_CASE("malformed JSON reports the failing line") {
  const std::string text = "{\n \"run_id\": \"x\",\n \"epsilon\": oops\n}";
  try {
    (void)parse_config_text(text);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("grid dimension must match the background dimension") {
  json j = json::parse(minimal_config_text());
  j["grid"]["geometry"] = "line";
  j["grid"]["n"] = 1;
  CHECK_THROWS_AS((void)parse_config(j), std::invalid_argument);
}

TEST_CASE("t0 auto resolves to the admissibility formula") {
  json j = json::parse(minimal_config_text());
  j["t0"] = "auto";
  j["background"] = {{"kind", "power_law"}, {"k", 0.5}, {"n", 3}, {"m", 1.0}};
  j["solver"]["t_end"] = 7.0;
  const RunConfig cfg = parse_config(j);
  CHECK_FALSE(cfg.t0.has_value());
  const ResolvedConfig rc = resolve(cfg);
  CHECK(rc.t0 == doctest::Approx(4.5).epsilon(1e-12)); // 6 k n / eps

  // minkowski: the formula gives 0, which resolves to 1
  json jm = json::parse(minimal_config_text());
  jm["t0"] = "auto";
  CHECK(resolve(parse_config(jm)).t0 == 1.0);
}

TEST_CASE("truncation rule: error without the override, pass with it") {
  json j = json::parse(minimal_config_text());
  j["grid"]["radius"] = 2.0; // needs rho + (t_end - t0)/a0 = 3.5
  CHECK_THROWS_AS((void)resolve(parse_config(j)), std::invalid_argument);

  j["truncation_override"] = true;
  const ResolvedConfig rc = resolve(parse_config(j));
  CHECK_FALSE(rc.truncation_ok);
  CHECK(rc.truncation_radius_needed == doctest::Approx(3.5).epsilon(1e-12));
}

TEST_CASE("parse_sweep_axis") {
  const SweepAxis a = parse_sweep_axis("initial.A=1.0:2.0:5");
  CHECK(a.path == "initial.A");
  CHECK(a.lo == 1.0);
  CHECK(a.hi == 2.0);
  CHECK(a.steps == 5);
  CHECK(a.value(0) == 1.0);
  CHECK(a.value(4) == 2.0);
  CHECK(a.value(2) == doctest::Approx(1.5).epsilon(1e-15));

  CHECK(parse_sweep_axis("x=3:3:1").value(0) == 3.0);
  CHECK_THROWS_AS((void)parse_sweep_axis("no_equals"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_sweep_axis("k=1:2"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_sweep_axis("k=1:2:0"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_sweep_axis("k=a:b:3"), std::invalid_argument);
}

TEST_CASE("sweep output is deterministic across worker counts") {
  RunConfig base = find_scenario("MINK-1")->config;
  base.grid.points = 128; // keep the sweep fast
  base.solver.record_every = 16;
  std::vector<SweepAxis> axes = {parse_sweep_axis("initial.A=9.58:9.64:4")};

  const SweepResult one = run_sweep(base, axes, 1);
  const SweepResult four = run_sweep(base, axes, 4);
  CHECK(sweep_to_csv(one) == sweep_to_csv(four));

  REQUIRE(one.cells.size() == 4);
  for (std::size_t i = 0; i < one.cells.size(); ++i) {
    CHECK(one.cells[i].index == static_cast<int>(i));
    CHECK_FALSE(one.cells[i].config_error);
  }
}

TEST_CASE("sweep csv has one header and one row per cell") {
  RunConfig base = find_scenario("MINK-1")->config;
  base.grid.points = 128;
  base.solver.record_every = 16;
  std::vector<SweepAxis> axes = {parse_sweep_axis("initial.A=9.58:9.64:2"),
                                 parse_sweep_axis("initial.B=9.58:9.64:2")};
  const SweepResult sw = run_sweep(base, axes, 2);
  const std::string csv = sweep_to_csv(sw);

  std::istringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  CHECK(line ==
        "cell,initial.A,initial.B,theorem_applies,outcome,t_blow,variant_proof,"
        "bound_respected");
  int rows = 0;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("sweep cells with invalid overrides report config errors in place") {
  RunConfig base = find_scenario("MINK-1")->config;
  base.grid.points = 128;
  // rho sweep crossing zero: nonpositive rho is rejected per cell
  std::vector<SweepAxis> axes = {parse_sweep_axis("initial.rho=-0.5:1.0:2")};
  const SweepResult sw = run_sweep(base, axes, 2);
  REQUIRE(sw.cells.size() == 2);
  CHECK(sw.cells[0].config_error);
  CHECK_FALSE(sw.cells[0].error.empty());
  CHECK_FALSE(sw.cells[1].config_error);
  CHECK(sw.cells[1].error.empty());
  const std::string csv = sweep_to_csv(sw);
  CHECK(csv.find("config_error") != std::string::npos);
}

TEST_CASE("simulate_and_write produces summary.json and series.csv") {
  RunConfig cfg = find_scenario("MINK-1")->config;
  cfg.grid.points = 128;
  cfg.solver.record_every = 16;
  cfg.run_id = "harness-io";
  cfg.output_dir = "harness_test_out";
  const RunResult r = simulate_and_write(resolve(cfg));

  std::ifstream summary("harness_test_out/harness-io/summary.json");
  REQUIRE(summary.good());
  json j;
  summary >> j;
  CHECK(j["schema"] == 1);
  CHECK(j["run_id"] == "harness-io");
  CHECK(j["outcome"]["kind"] == "blew_up");
  CHECK(j["bound"]["bound_respected"] == true);

  std::ifstream series("harness_test_out/harness-io/series.csv");
  REQUIRE(series.good());
  std::string header;
  std::getline(series, header);
  CHECK(header == "t,E,I,B,Bprime,xi,linf_u,l2_u,dt");
  int rows = 0;
  std::string line;
  while (std::getline(series, line))
    if (!line.empty()) ++rows;
  CHECK(rows == static_cast<int>(r.series.records.size()));
}
