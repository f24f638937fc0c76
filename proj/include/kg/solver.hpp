#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kg/background.hpp"
#include "kg/field.hpp"
#include "kg/grid.hpp"
#include "kg/nonlinearity.hpp"

namespace kg {

struct SolverConfig {
  double cfl = 0.5;            // dt <= cfl * a(t) * dx
  double dt_floor = 1e-12;
  double dt_max = 0.0;         // 0 = no fixed cap
  double dt_amp_coeff = 0.1;   // dt <= coeff / (1 + |u|_inf^(p-1))
  double blowup_linf = 1e8;
  double blowup_l2 = 1e10;
  double t_end = 1.0;
  int record_every = 8;

  void validate() const;
};

struct StepOutcome {
  enum class Kind { Alive, BlewUp, ReachedHorizon };
  enum class Trigger { None, LinfExceeded, L2Exceeded, NonFinite, DtUnderflow };

  Kind kind = Kind::Alive;
  Trigger trigger = Trigger::None;
  double t_blow = 0.0;
  // NonFinite while |u|_inf is still small indicates instability, not blowup
  bool suspicious = false;

  bool blew_up() const { return kind == Kind::BlewUp; }
};

std::string to_string(StepOutcome::Kind kind);
std::string to_string(StepOutcome::Trigger trigger);

// du = v; dv = a^-2 Lap u - n (adot/a) v - m^2 u + f(u)
void rhs(const FieldState& state, const BackgroundModel& bg,
         const NonlinearitySpec& nl, std::span<double> du, std::span<double> dv);

// One diagnostic sample along a run (extra columns beyond the CSV are kept
// for the acceptance checks).
struct DiagnosticRecord {
  double t = 0.0;
  double E = 0.0;
  double I = 0.0;
  double B = 0.0;       // |m u|^2
  double Bprime = 0.0;  // 2 (m^2 u, u_t)
  double xi = 0.0;      // -m^2 (lambda+1) |u_t|^2 - 2 m^2 I, lambda = eps/2 + 1
  double concavity_certificate = 0.0; // B'' B - (4+eps)/4 B'^2, filled post-hoc
  double linf_u = 0.0;
  double l2_u = 0.0;
  double l2_v_sq = 0.0;
  double grad_sq = 0.0; // Dirichlet form -(u, Lap u)
  double dt = 0.0;
};

// RK4 integrator with buffers reused across steps.
class Stepper {
 public:
  Stepper(const BackgroundModel& bg, const NonlinearitySpec& nl, SolverConfig cfg);

  // Time step the policy would take at `state` (before the horizon clamp).
  double dt_dynamic(const FieldState& state) const;

  // One RK4 step in place; classifies the post-step state.
  StepOutcome step(FieldState& state);

  const SolverConfig& config() const { return cfg_; }

 private:
  const BackgroundModel& bg_;
  const NonlinearitySpec& nl_;
  SolverConfig cfg_;
  std::vector<double> k1u_, k1v_, k2u_, k2v_, k3u_, k3v_, k4u_, k4v_;
  std::vector<double> su_, sv_, lap_;
  double last_dt_ = 0.0;

  void eval_rhs(const Grid& grid, double t, std::span<const double> u,
                std::span<const double> v, std::span<double> du, std::span<double> dv);
  void zero_boundary(const Grid& grid, std::span<double> u, std::span<double> v) const;

 public:
  double last_dt() const { return last_dt_; }
};

struct RunSeries {
  std::vector<DiagnosticRecord> records;
  StepOutcome outcome;
  long steps = 0;
};

// Integrate until horizon or blowup, sampling diagnostics every
// record_every steps and at the final step.
RunSeries run(FieldState initial, const BackgroundModel& bg,
              const NonlinearitySpec& nl, const SolverConfig& cfg, double epsilon);

DiagnosticRecord make_record(const FieldState& state, const BackgroundModel& bg,
                             const NonlinearitySpec& nl, double epsilon, double dt);

} // namespace kg
