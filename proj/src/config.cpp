#include "kg/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("config: " + where + ": " + what);
}

const json& need(const json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

BackgroundModel parse_background(const json& j) {
  const std::string kind = need(j, "kind", "background").get<std::string>();
  const int n = need(j, "n", "background").get<int>();
  const double m = need(j, "m", "background").get<double>();
  if (kind == "minkowski") return BackgroundModel::minkowski(n, m);
  if (kind == "de_sitter")
    return BackgroundModel::de_sitter(need(j, "H", "background").get<double>(), n, m);
  if (kind == "power_law")
    return BackgroundModel::power_law(need(j, "k", "background").get<double>(), n, m);
  if (kind == "tabulated") {
    std::vector<std::pair<double, double>> samples;
    for (const auto& s : need(j, "samples", "background"))
      samples.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
    return BackgroundModel::tabulated(std::move(samples), n, m);
  }
  fail("background", "unknown kind '" + kind + "'");
}

NonlinearitySpec parse_nonlinearity(const json& j, double epsilon) {
  const std::string kind = need(j, "kind", "nonlinearity").get<std::string>();
  if (kind == "zero") return NonlinearitySpec::zero(epsilon);
  const double p = need(j, "p", "nonlinearity").get<double>();
  if (kind == "power") return NonlinearitySpec::power(p, epsilon);
  if (kind == "focusing_power") return NonlinearitySpec::focusing_power(p, epsilon);
  if (kind == "defocusing_power")
    return NonlinearitySpec::defocusing_power(p, epsilon);
  fail("nonlinearity", "unknown kind '" + kind + "'");
}

GridSpec parse_grid(const json& j) {
  GridSpec g;
  const std::string geom = need(j, "geometry", "grid").get<std::string>();
  if (geom == "line")
    g.geometry = GridSpec::Geometry::Line1D;
  else if (geom == "radial")
    g.geometry = GridSpec::Geometry::RadialND;
  else
    fail("grid", "unknown geometry '" + geom + "'");
  g.n = need(j, "n", "grid").get<int>();
  g.radius = need(j, "radius", "grid").get<double>();
  g.points = need(j, "points", "grid").get<int>();
  g.validate();
  return g;
}

} // namespace

RunConfig parse_config(const json& j) {
  RunConfig cfg;
  cfg.run_id = need(j, "run_id", "top level").get<std::string>();
  if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
  cfg.epsilon = need(j, "epsilon", "top level").get<double>();
  if (cfg.epsilon <= 0.0) fail("top level", "epsilon must be positive");

  const json& t0 = need(j, "t0", "top level");
  if (t0.is_string()) {
    if (t0.get<std::string>() != "auto") fail("t0", "must be a number or \"auto\"");
  } else {
    cfg.t0 = t0.get<double>();
  }

  cfg.background = parse_background(need(j, "background", "top level"));
  cfg.nonlinearity = parse_nonlinearity(need(j, "nonlinearity", "top level"), cfg.epsilon);
  cfg.grid = parse_grid(need(j, "grid", "top level"));
  if (cfg.grid.n != cfg.background->n())
    fail("grid", "grid.n must match background.n");

  const json& ini = need(j, "initial", "top level");
  cfg.initial.A = need(ini, "A", "initial").get<double>();
  cfg.initial.B = need(ini, "B", "initial").get<double>();
  cfg.initial.rho = need(ini, "rho", "initial").get<double>();
  if (cfg.initial.rho <= 0.0) fail("initial", "rho must be positive");

  const json& sol = need(j, "solver", "top level");
  SolverConfig& s = cfg.solver;
  if (sol.contains("cfl")) s.cfl = sol["cfl"].get<double>();
  if (sol.contains("dt_floor")) s.dt_floor = sol["dt_floor"].get<double>();
  if (sol.contains("dt_max")) s.dt_max = sol["dt_max"].get<double>();
  if (sol.contains("dt_amp_coeff")) s.dt_amp_coeff = sol["dt_amp_coeff"].get<double>();
  if (sol.contains("blowup_linf")) s.blowup_linf = sol["blowup_linf"].get<double>();
  if (sol.contains("blowup_l2")) s.blowup_l2 = sol["blowup_l2"].get<double>();
  s.t_end = need(sol, "t_end", "solver").get<double>();
  if (sol.contains("record_every")) s.record_every = sol["record_every"].get<int>();
  s.validate();

  if (j.contains("truncation_override"))
    cfg.truncation_override = j["truncation_override"].get<bool>();
  return cfg;
}

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // json::parse_error reports a byte offset; convert it to a line number
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw std::invalid_argument("config: parse error at line " + std::to_string(line) +
                                ": " + e.what());
  }
  return parse_config(j);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["run_id"] = cfg.run_id;
  j["output_dir"] = cfg.output_dir;
  j["epsilon"] = cfg.epsilon;
  if (cfg.t0)
    j["t0"] = *cfg.t0;
  else
    j["t0"] = "auto";

  json bg;
  bg["kind"] = to_string(cfg.bg().kind());
  bg["n"] = cfg.bg().n();
  bg["m"] = cfg.bg().m();
  switch (cfg.bg().kind()) {
    case BackgroundModel::Kind::DeSitter: bg["H"] = cfg.bg().hubble_constant(); break;
    case BackgroundModel::Kind::PowerLaw: bg["k"] = cfg.bg().power_exponent(); break;
    case BackgroundModel::Kind::Tabulated: {
      json samples = json::array();
      for (const auto& [t, a] : cfg.bg().samples()) samples.push_back({t, a});
      bg["samples"] = std::move(samples);
      break;
    }
    default: break;
  }
  j["background"] = std::move(bg);

  json nl;
  nl["kind"] = to_string(cfg.nl().kind());
  if (cfg.nl().kind() != NonlinearitySpec::Kind::Zero) nl["p"] = cfg.nl().p();
  j["nonlinearity"] = std::move(nl);

  j["grid"] = {{"geometry", cfg.grid.geometry == GridSpec::Geometry::Line1D
                                ? "line"
                                : "radial"},
               {"n", cfg.grid.n},
               {"radius", cfg.grid.radius},
               {"points", cfg.grid.points}};
  j["initial"] = {{"A", cfg.initial.A}, {"B", cfg.initial.B}, {"rho", cfg.initial.rho}};
  j["solver"] = {{"cfl", cfg.solver.cfl},
                 {"dt_floor", cfg.solver.dt_floor},
                 {"dt_max", cfg.solver.dt_max},
                 {"dt_amp_coeff", cfg.solver.dt_amp_coeff},
                 {"blowup_linf", cfg.solver.blowup_linf},
                 {"blowup_l2", cfg.solver.blowup_l2},
                 {"t_end", cfg.solver.t_end},
                 {"record_every", cfg.solver.record_every}};
  j["truncation_override"] = cfg.truncation_override;
  return j;
}

ResolvedConfig resolve(const RunConfig& cfg) {
  ResolvedConfig r;
  r.cfg = cfg;
  if (cfg.t0) {
    r.t0 = *cfg.t0;
  } else {
    const double t_min = cfg.bg().min_admissible_t0(cfg.epsilon);
    r.t0 = t_min > 0.0 ? t_min : 1.0;
  }
  if (r.t0 <= 0.0) fail("t0", "resolved t0 must be positive");
  if (cfg.solver.t_end < r.t0) fail("solver", "t_end must be >= t0");

  // truncation rule: the Dirichlet box must contain the domain of influence
  const double a0 = cfg.bg().eval(r.t0).a;
  r.truncation_radius_needed = cfg.initial.rho + (cfg.solver.t_end - r.t0) / a0;
  r.truncation_ok = cfg.grid.radius >= r.truncation_radius_needed - 1e-12;
  if (!r.truncation_ok && !cfg.truncation_override)
    fail("grid", "radius " + std::to_string(cfg.grid.radius) +
                     " violates the truncation rule (needs >= " +
                     std::to_string(r.truncation_radius_needed) +
                     "); set truncation_override to proceed");
  return r;
}

} // namespace kg
