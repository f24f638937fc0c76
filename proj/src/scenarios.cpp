#include "kg/scenarios.hpp"

namespace kg {

namespace {

// Amplitudes generated by `scenario_oracle` (midpoint of the applicability
// window at 1024 grid points). Regenerate with:
//   ./build/tools/scenario_oracle
constexpr double kDs1Amplitude = 9.5235492551631022;   // window [9.479, 9.568]
constexpr double kFlrw1Amplitude = 5.2708353216311172; // window [5.190, 5.351]
constexpr double kMink1Amplitude = 9.609449985793816;  // window [9.565, 9.654]

SolverConfig blowup_solver(double t_end) {
  SolverConfig s;
  s.cfl = 0.5;
  s.dt_amp_coeff = 0.01; // keeps the recorded energy drift under 1e-6 relative
  s.blowup_linf = 300.0;
  s.blowup_l2 = 1e10;
  s.t_end = t_end;
  s.record_every = 8;
  return s;
}

RunConfig ds1() {
  RunConfig c;
  c.run_id = "DS-1";
  c.epsilon = 2.0;
  c.t0 = 1.0;
  c.background = BackgroundModel::de_sitter(0.01, 3, 1.0); // H < eps/6n = 1/9
  c.nonlinearity = NonlinearitySpec::focusing_power(3.0, c.epsilon);
  c.grid = {GridSpec::Geometry::RadialND, 3, 4.0, 1024};
  c.initial = {kDs1Amplitude, kDs1Amplitude, 1.0};
  c.solver = blowup_solver(3.5);
  return c;
}

RunConfig flrw1() {
  RunConfig c;
  c.run_id = "FLRW-1";
  c.epsilon = 2.0;
  c.t0 = 4.5; // 6 k n / eps
  c.background = BackgroundModel::power_law(0.5, 3, 1.0); // k <= 2/n
  c.nonlinearity = NonlinearitySpec::focusing_power(3.0, c.epsilon);
  c.grid = {GridSpec::Geometry::RadialND, 3, 4.0, 1024};
  c.initial = {kFlrw1Amplitude, kFlrw1Amplitude, 1.0};
  c.solver = blowup_solver(7.0);
  return c;
}

RunConfig mink1() {
  RunConfig c;
  c.run_id = "MINK-1";
  c.epsilon = 2.0;
  c.t0 = 1.0;
  c.background = BackgroundModel::minkowski(3, 1.0);
  c.nonlinearity = NonlinearitySpec::focusing_power(3.0, c.epsilon);
  c.grid = {GridSpec::Geometry::RadialND, 3, 4.0, 1024};
  c.initial = {kMink1Amplitude, kMink1Amplitude, 1.0};
  c.solver = blowup_solver(3.5);
  return c;
}

RunConfig mink1_linear() {
  RunConfig c;
  c.run_id = "MINK-1-LINEAR";
  c.epsilon = 2.0;
  c.t0 = 1.0;
  c.background = BackgroundModel::minkowski(1, 1.0);
  c.nonlinearity = NonlinearitySpec::zero(c.epsilon);
  c.grid = {GridSpec::Geometry::Line1D, 1, 6.0, 1024};
  c.initial = {1.0, 0.0, 1.0};
  SolverConfig s;
  s.cfl = 0.5;
  s.dt_amp_coeff = 0.01;
  s.t_end = 5.0;
  s.record_every = 8;
  c.solver = s;
  return c;
}

RunConfig defocus_ctrl() {
  RunConfig c = ds1();
  c.run_id = "DEFOCUS-CTRL";
  c.nonlinearity = NonlinearitySpec::defocusing_power(3.0, c.epsilon);
  return c;
}

} // namespace

const std::vector<Scenario>& built_in_scenarios() {
  static const std::vector<Scenario> scenarios = {
      {"DS-1",
       "de Sitter, n=3, H=0.01 < eps/6n, m=1, focusing p=3; blowup case",
       ds1()},
      {"FLRW-1",
       "power-law a=t^k, k=1/2 <= 2/n, t0 = 6kn/eps = 4.5, focusing p=3; blowup case",
       flrw1()},
      {"MINK-1", "flat-space baseline a=1, focusing p=3; blowup case", mink1()},
      {"MINK-1-LINEAR",
       "flat-space linear control (zero source); energy-conserving standing wave",
       mink1_linear()},
      {"DEFOCUS-CTRL",
       "defocusing p=3 control; inadmissible nonlinearity, must not apply",
       defocus_ctrl()},
  };
  return scenarios;
}

const Scenario* find_scenario(const std::string& name) {
  for (const auto& s : built_in_scenarios())
    if (s.name == name) return &s;
  return nullptr;
}

} // namespace kg
