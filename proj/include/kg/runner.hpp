#pragma once

#include <optional>
#include <string>

#include "kg/config.hpp"
#include "kg/diagnostics.hpp"
#include "kg/hypotheses.hpp"
#include "kg/scenarios.hpp"
#include "kg/solver.hpp"

#include <nlohmann/json_fwd.hpp>

namespace kg {

// Full outcome of one simulation (or of the check/bound stages alone).
struct RunResult {
  std::string run_id;
  ResolvedConfig resolved;
  CosmologyAudit audit;
  AdmissibilityReport admissibility;
  HypothesisReport hypotheses;
  std::optional<diagnostics::BoundReport> bound;
  std::optional<StepOutcome> outcome; // absent for check/bound stages
  RunSeries series;
  diagnostics::InvariantSetReport invariant_set;
  diagnostics::ConcavityReport concavity;
  std::string series_path;
  double wall_seconds = 0.0;
  bool anomaly = false; // theorem applied but the horizon outlived the bound
};

// check/bound stages: audit + admissibility + hypotheses (+ bound report).
RunResult evaluate_run(const ResolvedConfig& rc);

// full simulation; does not write any files
RunResult simulate_run(const ResolvedConfig& rc);

// simulate and persist <out>/<run_id>/summary.json and series.csv
RunResult simulate_and_write(const ResolvedConfig& rc);

FieldState make_initial_state(const ResolvedConfig& rc);

nlohmann::json result_to_json(const RunResult& r);
void write_series_csv(const std::string& path, const RunSeries& series);

} // namespace kg
