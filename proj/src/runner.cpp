#include "kg/runner.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

namespace kg {

using nlohmann::json;

FieldState make_initial_state(const ResolvedConfig& rc) {
  auto grid = std::make_shared<Grid>(rc.cfg.grid);
  return bump_initial_data(std::move(grid), rc.t0, rc.cfg.initial.A,
                           rc.cfg.initial.B, rc.cfg.initial.rho);
}

RunResult evaluate_run(const ResolvedConfig& rc) {
  RunResult r;
  r.run_id = rc.cfg.run_id;
  r.resolved = rc;
  r.audit = rc.cfg.bg().audit(rc.cfg.epsilon, rc.t0, rc.cfg.solver.t_end);
  r.admissibility = rc.cfg.nl().check_admissibility(rc.cfg.bg().n());

  const FieldState initial = make_initial_state(rc);
  r.hypotheses = evaluate_hypotheses(initial, rc.cfg.bg(), rc.cfg.nl(),
                                     rc.cfg.epsilon, r.audit, r.admissibility);
  if (r.hypotheses.uu0 > 0.0 && r.hypotheses.u0_l2sq > 0.0) {
    const double m2 = rc.cfg.bg().m() * rc.cfg.bg().m();
    r.bound = diagnostics::tmax_bound(m2 * r.hypotheses.u0_l2sq,
                                      2.0 * m2 * r.hypotheses.uu0,
                                      rc.cfg.epsilon, rc.t0);
  }
  return r;
}

RunResult simulate_run(const ResolvedConfig& rc) {
  const auto t_start = std::chrono::steady_clock::now();
  RunResult r = evaluate_run(rc);

  r.series = run(make_initial_state(rc), rc.cfg.bg(), rc.cfg.nl(), rc.cfg.solver,
                 rc.cfg.epsilon);
  r.outcome = r.series.outcome;
  if (r.outcome->blew_up() && r.bound)
    diagnostics::attach_observation(*r.bound, r.outcome->t_blow);

  r.invariant_set = diagnostics::verify_invariant_set(r.series.records);
  r.concavity = diagnostics::verify_concavity(r.series.records, rc.cfg.epsilon);

  r.anomaly = r.hypotheses.theorem_applies &&
              r.outcome->kind == StepOutcome::Kind::ReachedHorizon && r.bound &&
              rc.cfg.solver.t_end >= r.bound->variant_proof;

  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return r;
}

void write_series_csv(const std::string& path, const RunSeries& series) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "t,E,I,B,Bprime,xi,linf_u,l2_u,dt\n";
  char buf[256];
  for (const auto& r : series.records) {
    std::snprintf(buf, sizeof buf,
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t,
                  r.E, r.I, r.B, r.Bprime, r.xi, r.linf_u, r.l2_u, r.dt);
    out << buf;
  }
}

json result_to_json(const RunResult& r) {
  json j;
  j["schema"] = 1;
  j["run_id"] = r.run_id;
  j["config"] = config_to_json(r.resolved.cfg);
  j["resolved_t0"] = r.resolved.t0;
  j["truncation_ok"] = r.resolved.truncation_ok;

  j["audit"] = {{"hubble_ratio_at_t0", r.audit.hubble_ratio_at_t0},
                {"epsilon_bound", r.audit.epsilon_bound},
                {"initial_time_ok", r.audit.initial_time_ok},
                {"curved_mass_positive", r.audit.curved_mass_positive},
                {"curved_mass_nonincreasing", r.audit.curved_mass_nonincreasing},
                {"min_admissible_t0", r.audit.min_admissible_t0}};

  j["admissibility"] = {{"epsilon_condition", r.admissibility.epsilon_condition},
                        {"lipschitz_exponent_ok", r.admissibility.lipschitz_exponent_ok},
                        {"exponent_constraint_vacuous",
                         r.admissibility.exponent_constraint_vacuous},
                        {"alpha_f", r.admissibility.alpha_f}};
  if (r.admissibility.counterexample_s)
    j["admissibility"]["counterexample_s"] = *r.admissibility.counterexample_s;

  j["hypotheses"] = {{"E0", r.hypotheses.E0},
                     {"I0", r.hypotheses.I0},
                     {"uu0", r.hypotheses.uu0},
                     {"u0_l2sq", r.hypotheses.u0_l2sq},
                     {"threshold_S", r.hypotheses.threshold_S},
                     {"nehari_negative", r.hypotheses.nehari_negative},
                     {"pairing_ok", r.hypotheses.pairing_ok},
                     {"case_label", to_string(r.hypotheses.case_label)},
                     {"theorem_applies", r.hypotheses.theorem_applies}};

  if (r.bound) {
    j["bound"] = {{"variant_theorem", r.bound->variant_theorem},
                  {"variant_proof", r.bound->variant_proof},
                  {"bound_respected", r.bound->bound_respected}};
    if (r.bound->observed_t_blow)
      j["bound"]["observed_t_blow"] = *r.bound->observed_t_blow;
  }

  if (r.outcome) {
    j["outcome"] = {{"kind", to_string(r.outcome->kind)},
                    {"trigger", to_string(r.outcome->trigger)},
                    {"suspicious", r.outcome->suspicious}};
    if (r.outcome->blew_up()) j["outcome"]["t_blow"] = r.outcome->t_blow;
    j["invariant_set"] = {{"applicable", r.invariant_set.applicable},
                          {"nehari_negative_throughout",
                           r.invariant_set.nehari_negative_throughout},
                          {"bprime_nondecreasing", r.invariant_set.bprime_nondecreasing},
                          {"xi_positive", r.invariant_set.xi_positive}};
    j["concavity"] = {{"applicable", r.concavity.applicable},
                      {"decreasing", r.concavity.decreasing},
                      {"concave", r.concavity.concave}};
    j["records"] = r.series.records.size();
    j["steps"] = r.series.steps;
  }
  if (!r.series_path.empty()) j["series_csv"] = r.series_path;
  j["wall_seconds"] = r.wall_seconds;
  j["anomaly"] = r.anomaly;
  return j;
}

RunResult simulate_and_write(const ResolvedConfig& rc) {
  RunResult r = simulate_run(rc);
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(rc.cfg.output_dir) / rc.cfg.run_id;
  fs::create_directories(dir);
  r.series_path = (dir / "series.csv").string();
  write_series_csv(r.series_path, r.series);
  std::ofstream summary(dir / "summary.json");
  summary << result_to_json(r).dump(2) << "\n";
  return r;
}

} // namespace kg
