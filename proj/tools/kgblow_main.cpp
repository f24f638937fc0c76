#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kg/runner.hpp"
#include "kg/scenarios.hpp"
#include "kg/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitAnomaly = 3;

// A config argument is either a built-in scenario name or a JSON file path.
kg::RunConfig load_config_arg(const std::string& arg) {
  if (const kg::Scenario* sc = kg::find_scenario(arg)) return sc->config;
  return kg::load_config_file(arg);
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void print_check(const kg::RunResult& r) {
  const auto& h = r.hypotheses;
  std::printf("run            %s\n", r.run_id.c_str());
  std::printf("t0             %.17g\n", r.resolved.t0);
  std::printf("background ok  %s (M^2 positive %s, nonincreasing %s, t0 admissible %s)\n",
              yesno(h.background_ok), yesno(r.audit.curved_mass_positive),
              yesno(r.audit.curved_mass_nonincreasing), yesno(r.audit.initial_time_ok));
  std::printf("nonlinearity   %s (epsilon condition %s, lipschitz %s)\n",
              yesno(h.nonlinearity_ok), yesno(r.admissibility.epsilon_condition),
              yesno(r.admissibility.lipschitz_exponent_ok));
  std::printf("E0             %.17g\n", h.E0);
  std::printf("I0             %.17g  (negative %s)\n", h.I0, yesno(h.nehari_negative));
  std::printf("(u0,u1)        %.17g  vs threshold S = %.17g\n", h.uu0, h.threshold_S);
  std::printf("case           %s\n", kg::to_string(h.case_label).c_str());
  std::printf("theorem        %s\n", h.theorem_applies ? "APPLIES" : "does not apply");
}

void print_bound(const kg::RunResult& r) {
  if (!r.bound) {
    std::printf("bound          not computable ((u0,u1) <= 0)\n");
    return;
  }
  std::printf("T_max bound    %.17g   (theorem variant: %.17g)\n",
              r.bound->variant_proof, r.bound->variant_theorem);
}

int cmd_check(const std::string& config_arg, bool with_bound) {
  const kg::RunResult r = kg::evaluate_run(kg::resolve(load_config_arg(config_arg)));
  print_check(r);
  if (with_bound) print_bound(r);
  return r.hypotheses.theorem_applies ? kExitOk : kExitCheckFailed;
}

int cmd_simulate(const std::string& config_arg, const std::string& out_override) {
  kg::RunConfig cfg = load_config_arg(config_arg);
  if (!out_override.empty()) cfg.output_dir = out_override;
  const kg::RunResult r = kg::simulate_and_write(kg::resolve(cfg));
  print_check(r);
  print_bound(r);
  if (r.outcome) {
    std::printf("outcome        %s", kg::to_string(r.outcome->kind).c_str());
    if (r.outcome->blew_up()) std::printf(" at t = %.17g", r.outcome->t_blow);
    std::printf("\n");
  }
  if (r.bound && r.bound->observed_t_blow)
    std::printf("bound held     %s\n", yesno(r.bound->bound_respected));
  std::printf("wrote          %s\n", r.series_path.c_str());
  if (r.anomaly) {
    std::fprintf(stderr, "ANOMALY: theorem applied but the run outlived the bound\n");
    return kExitAnomaly;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& config_arg, const std::vector<std::string>& vary,
              const std::string& out_override, int workers) {
  kg::RunConfig base = load_config_arg(config_arg);
  if (!out_override.empty()) base.output_dir = out_override;
  std::vector<kg::SweepAxis> axes;
  for (const auto& v : vary) axes.push_back(kg::parse_sweep_axis(v));
  const kg::SweepResult sweep = kg::run_sweep(base, axes, workers);

  std::filesystem::create_directories(base.output_dir);
  const std::string csv_path = base.output_dir + "/sweep.csv";
  std::ofstream out(csv_path);
  out << kg::sweep_to_csv(sweep);
  std::printf("%zu cells -> %s\n", sweep.cells.size(), csv_path.c_str());
  if (sweep.any_anomaly) {
    std::fprintf(stderr, "ANOMALY in at least one sweep cell\n");
    return kExitAnomaly;
  }
  return kExitOk;
}

int cmd_scenarios() {
  for (const auto& sc : kg::built_in_scenarios())
    std::printf("%-14s %s\n", sc.name.c_str(), sc.description.c_str());
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blowup laboratory for semilinear Klein-Gordon fields on FLRW backgrounds"};
  app.require_subcommand(1);

  std::string config_arg, out_override;
  std::vector<std::string> vary;
  int workers = 0;

  auto* check = app.add_subcommand("check", "Audit background, nonlinearity and initial data");
  check->add_option("config", config_arg, "Config file or scenario name")->required();

  auto* bound = app.add_subcommand("bound", "Hypothesis report plus the T_max bound");
  bound->add_option("config", config_arg, "Config file or scenario name")->required();

  auto* simulate = app.add_subcommand("simulate", "Run the solver and write summary + series");
  simulate->add_option("config", config_arg, "Config file or scenario name")->required();
  simulate->add_option("-o,--out", out_override, "Override the output directory");

  auto* sweep = app.add_subcommand("sweep", "Cartesian parameter sweep");
  sweep->add_option("config", config_arg, "Base config file or scenario name")->required();
  sweep->add_option("--vary", vary, "key=lo:hi:steps (repeatable)")->required();
  sweep->add_option("-o,--out", out_override, "Override the output directory");
  sweep->add_option("-j,--workers", workers, "Worker count (default: KG_WORKERS or all cores)");

  auto* scenarios = app.add_subcommand("scenarios", "List built-in scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(config_arg, false);
    if (*bound) return cmd_check(config_arg, true);
    if (*simulate) return cmd_simulate(config_arg, out_override);
    if (*sweep) return cmd_sweep(config_arg, vary, out_override, workers);
    if (*scenarios) return cmd_scenarios();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfigError;
  }
  return kExitConfigError;
}
