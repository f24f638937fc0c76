#pragma once

#include <optional>
#include <string>

#include "kg/background.hpp"
#include "kg/grid.hpp"
#include "kg/nonlinearity.hpp"
#include "kg/solver.hpp"

#include <nlohmann/json_fwd.hpp>

namespace kg {

struct InitialDataSpec {
  double A = 1.0;
  double B = 1.0;
  double rho = 1.0;
};

// Full run configuration: the five blocks plus the scalars epsilon / t0.
struct RunConfig {
  std::string run_id;
  std::string output_dir = "out";
  double epsilon = 2.0;
  std::optional<double> t0; // nullopt = "auto" (resolved to min_admissible_t0)
  std::optional<BackgroundModel> background;
  std::optional<NonlinearitySpec> nonlinearity;
  GridSpec grid;
  InitialDataSpec initial;
  SolverConfig solver;
  bool truncation_override = false;

  const BackgroundModel& bg() const { return *background; }
  const NonlinearitySpec& nl() const { return *nonlinearity; }
};

// Resolved config: t0 fixed and the truncation rule
// R >= rho + (t_end - t0)/a(t0) validated (unless overridden).
struct ResolvedConfig {
  RunConfig cfg;
  double t0 = 0.0;
  bool truncation_ok = true;
  double truncation_radius_needed = 0.0;
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig parse_config_text(const std::string& text); // line-anchored parse errors
RunConfig load_config_file(const std::string& path);

nlohmann::json config_to_json(const RunConfig& cfg);

ResolvedConfig resolve(const RunConfig& cfg);

} // namespace kg
