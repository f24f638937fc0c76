#include "kg/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "kg/diagnostics.hpp"
#include "kg/kernels.hpp"

namespace kg {

void SolverConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0))
    throw std::invalid_argument("solver: cfl must be in (0, 1]");
  if (dt_floor <= 0.0) throw std::invalid_argument("solver: dt_floor must be positive");
  if (dt_amp_coeff <= 0.0)
    throw std::invalid_argument("solver: dt_amp_coeff must be positive");
  if (dt_max < 0.0) throw std::invalid_argument("solver: dt_max must be >= 0");
  if (blowup_linf <= 0.0 || blowup_l2 <= 0.0)
    throw std::invalid_argument("solver: blowup thresholds must be positive");
  if (record_every < 1) throw std::invalid_argument("solver: record_every must be >= 1");
}

std::string to_string(StepOutcome::Kind kind) {
  switch (kind) {
    case StepOutcome::Kind::Alive: return "alive";
    case StepOutcome::Kind::BlewUp: return "blew_up";
    case StepOutcome::Kind::ReachedHorizon: return "reached_horizon";
  }
  return "?";
}

std::string to_string(StepOutcome::Trigger trigger) {
  switch (trigger) {
    case StepOutcome::Trigger::None: return "none";
    case StepOutcome::Trigger::LinfExceeded: return "linf_exceeded";
    case StepOutcome::Trigger::L2Exceeded: return "l2_exceeded";
    case StepOutcome::Trigger::NonFinite: return "non_finite";
    case StepOutcome::Trigger::DtUnderflow: return "dt_underflow";
  }
  return "?";
}

namespace {

// f(u) evaluated pointwise; the p = 3 and p = 2 powers avoid std::pow in the
// inner loop.
struct SourceTerm {
  NonlinearitySpec::Kind kind;
  double p;
  double sign; // +1 focusing/power, -1 defocusing

  explicit SourceTerm(const NonlinearitySpec& nl)
      : kind(nl.kind()), p(nl.p()),
        sign(nl.kind() == NonlinearitySpec::Kind::DefocusingPower ? -1.0 : 1.0) {}

  double operator()(double s) const {
    if (kind == NonlinearitySpec::Kind::Zero) return 0.0;
    if (p == 3.0) return sign * s * s * s;
    if (p == 2.0) return sign * std::abs(s) * s;
    return sign * std::pow(std::abs(s), p - 1.0) * s;
  }
};

} // namespace

void rhs(const FieldState& state, const BackgroundModel& bg,
         const NonlinearitySpec& nl, std::span<double> du, std::span<double> dv) {
  const Grid& grid = *state.grid;
  std::vector<double> lap(state.u.size());
  kernels::laplacian(grid, state.u, lap);

  const auto e = bg.eval(state.t);
  const double inv_a2 = 1.0 / (e.a * e.a);
  const double fric = bg.n() * e.adot / e.a;
  const double m2 = bg.m() * bg.m();
  const SourceTerm f(nl);
  const long N = static_cast<long>(state.u.size());

  if (kernels::use_parallel(state.u.size())) {
#pragma omp parallel for schedule(static)
    for (long j = 0; j < N; ++j) {
      du[j] = state.v[j];
      dv[j] = inv_a2 * lap[j] - fric * state.v[j] - m2 * state.u[j] + f(state.u[j]);
    }
  } else {
    for (long j = 0; j < N; ++j) {
      du[j] = state.v[j];
      dv[j] = inv_a2 * lap[j] - fric * state.v[j] - m2 * state.u[j] + f(state.u[j]);
    }
  }
  if (!grid.spec().periodic) {
    du[N - 1] = dv[N - 1] = 0.0;
    if (grid.spec().geometry == GridSpec::Geometry::Line1D) du[0] = dv[0] = 0.0;
  }
}

Stepper::Stepper(const BackgroundModel& bg, const NonlinearitySpec& nl,
                 SolverConfig cfg)
    : bg_(bg), nl_(nl), cfg_(cfg) {
  cfg_.validate();
}

void Stepper::eval_rhs(const Grid& grid, double t, std::span<const double> u,
                       std::span<const double> v, std::span<double> du,
                       std::span<double> dv) {
  lap_.resize(u.size());
  kernels::laplacian(grid, u, lap_);

  const auto e = bg_.eval(t);
  const double inv_a2 = 1.0 / (e.a * e.a);
  const double fric = bg_.n() * e.adot / e.a;
  const double m2 = bg_.m() * bg_.m();
  const SourceTerm f(nl_);
  const long N = static_cast<long>(u.size());

  if (kernels::use_parallel(u.size())) {
#pragma omp parallel for schedule(static)
    for (long j = 0; j < N; ++j) {
      du[j] = v[j];
      dv[j] = inv_a2 * lap_[j] - fric * v[j] - m2 * u[j] + f(u[j]);
    }
  } else {
    for (long j = 0; j < N; ++j) {
      du[j] = v[j];
      dv[j] = inv_a2 * lap_[j] - fric * v[j] - m2 * u[j] + f(u[j]);
    }
  }
  if (!grid.spec().periodic) {
    du[N - 1] = dv[N - 1] = 0.0;
    if (grid.spec().geometry == GridSpec::Geometry::Line1D) du[0] = dv[0] = 0.0;
  }
}

void Stepper::zero_boundary(const Grid& grid, std::span<double> u,
                            std::span<double> v) const {
  if (grid.spec().periodic) return;
  const std::size_t N = u.size();
  u[N - 1] = v[N - 1] = 0.0;
  if (grid.spec().geometry == GridSpec::Geometry::Line1D) u[0] = v[0] = 0.0;
}

double Stepper::dt_dynamic(const FieldState& state) const {
  const auto e = bg_.eval(state.t);
  double dt = cfg_.cfl * e.a * state.grid->dx();
  // amplitude-limited step: keeps the blowup time localized to one small step
  const double amp = kernels::linf(state.u);
  const double dt_amp =
      cfg_.dt_amp_coeff / (1.0 + std::pow(amp, nl_.alpha_f()));
  dt = std::min(dt, dt_amp);
  if (cfg_.dt_max > 0.0) dt = std::min(dt, cfg_.dt_max);
  return dt;
}

StepOutcome Stepper::step(FieldState& state) {
  const Grid& grid = *state.grid;
  const std::size_t N = state.u.size();
  const double t0 = state.t;

  const double dt_dyn = dt_dynamic(state);
  if (dt_dyn < cfg_.dt_floor) {
    StepOutcome out;
    out.kind = StepOutcome::Kind::BlewUp;
    out.trigger = StepOutcome::Trigger::DtUnderflow;
    out.t_blow = t0;
    last_dt_ = dt_dyn;
    return out;
  }
  const double dt = std::min(dt_dyn, cfg_.t_end - t0);
  last_dt_ = dt;

  const double linf_before = kernels::linf(state.u);

  for (auto* b : {&k1u_, &k1v_, &k2u_, &k2v_, &k3u_, &k3v_, &k4u_, &k4v_, &su_, &sv_})
    b->resize(N);

  eval_rhs(grid, t0, state.u, state.v, k1u_, k1v_);
  kernels::axpy(state.u, 0.5 * dt, k1u_, su_);
  kernels::axpy(state.v, 0.5 * dt, k1v_, sv_);
  eval_rhs(grid, t0 + 0.5 * dt, su_, sv_, k2u_, k2v_);
  kernels::axpy(state.u, 0.5 * dt, k2u_, su_);
  kernels::axpy(state.v, 0.5 * dt, k2v_, sv_);
  eval_rhs(grid, t0 + 0.5 * dt, su_, sv_, k3u_, k3v_);
  kernels::axpy(state.u, dt, k3u_, su_);
  kernels::axpy(state.v, dt, k3v_, sv_);
  eval_rhs(grid, t0 + dt, su_, sv_, k4u_, k4v_);
  kernels::rk4_combine(state.u, k1u_, k2u_, k3u_, k4u_, dt, state.u);
  kernels::rk4_combine(state.v, k1v_, k2v_, k3v_, k4v_, dt, state.v);
  state.t = t0 + dt;
  zero_boundary(grid, state.u, state.v);

  StepOutcome out;
  if (!kernels::all_finite(state.u) || !kernels::all_finite(state.v)) {
    out.kind = StepOutcome::Kind::BlewUp;
    out.trigger = StepOutcome::Trigger::NonFinite;
    out.t_blow = 0.5 * (t0 + state.t);
    out.suspicious = linf_before < 1e3;
    return out;
  }
  const double amp = kernels::linf(state.u);
  if (amp > cfg_.blowup_linf) {
    out.kind = StepOutcome::Kind::BlewUp;
    out.trigger = StepOutcome::Trigger::LinfExceeded;
    out.t_blow = 0.5 * (t0 + state.t);
    return out;
  }
  const double l2 = std::sqrt(std::max(0.0, inner(state.u, state.u, grid)));
  if (l2 > cfg_.blowup_l2) {
    out.kind = StepOutcome::Kind::BlewUp;
    out.trigger = StepOutcome::Trigger::L2Exceeded;
    out.t_blow = 0.5 * (t0 + state.t);
    return out;
  }
  out.kind = state.t >= cfg_.t_end ? StepOutcome::Kind::ReachedHorizon
                                   : StepOutcome::Kind::Alive;
  return out;
}

DiagnosticRecord make_record(const FieldState& state, const BackgroundModel& bg,
                             const NonlinearitySpec& nl, double epsilon, double dt) {
  const Grid& g = *state.grid;
  DiagnosticRecord r;
  r.t = state.t;
  r.E = energy(state, bg, nl);
  r.I = nehari(state, bg, nl);
  const double m2 = bg.m() * bg.m();
  const double uu = inner(state.u, state.u, g);
  r.B = m2 * uu;
  r.Bprime = 2.0 * m2 * inner(state.u, state.v, g);
  r.l2_v_sq = inner(state.v, state.v, g);
  const double lambda = 0.5 * epsilon + 1.0;
  r.xi = -m2 * (lambda + 1.0) * r.l2_v_sq - 2.0 * m2 * r.I;
  r.linf_u = kernels::linf(state.u);
  r.l2_u = std::sqrt(std::max(0.0, uu));
  r.grad_sq = dirichlet_form(state.u, g);
  r.dt = dt;
  return r;
}

RunSeries run(FieldState initial, const BackgroundModel& bg,
              const NonlinearitySpec& nl, const SolverConfig& cfg, double epsilon) {
  cfg.validate();
  RunSeries out;
  if (cfg.t_end <= initial.t) {
    out.outcome.kind = StepOutcome::Kind::ReachedHorizon;
    return out;
  }

  Stepper stepper(bg, nl, cfg);
  FieldState state = std::move(initial);
  FieldState prev = state;
  out.records.push_back(make_record(state, bg, nl, epsilon, 0.0));

  while (true) {
    prev.u = state.u;
    prev.v = state.v;
    prev.t = state.t;
    const StepOutcome so = stepper.step(state);
    if (so.kind == StepOutcome::Kind::BlewUp) {
      out.outcome = so;
      // final sample: the triggering state if finite, else the last alive one
      const FieldState& fin =
          (kernels::all_finite(state.u) && kernels::all_finite(state.v)) ? state
                                                                         : prev;
      if (fin.t > out.records.back().t)
        out.records.push_back(make_record(fin, bg, nl, epsilon, stepper.last_dt()));
      break;
    }
    ++out.steps;
    if (so.kind == StepOutcome::Kind::ReachedHorizon) {
      out.outcome = so;
      if (state.t > out.records.back().t)
        out.records.push_back(make_record(state, bg, nl, epsilon, stepper.last_dt()));
      break;
    }
    if (out.steps % cfg.record_every == 0)
      out.records.push_back(make_record(state, bg, nl, epsilon, stepper.last_dt()));
  }

  diagnostics::fill_concavity_certificates(out.records, epsilon);
  return out;
}

} // namespace kg
