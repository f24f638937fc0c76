#include "kg/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace kg::diagnostics {

BoundReport tmax_bound(double B0, double Bprime0, double epsilon, double t0) {
  if (B0 <= 0.0) throw std::domain_error("tmax_bound: B(t0) must be positive");
  if (epsilon <= 0.0) throw std::domain_error("tmax_bound: epsilon must be positive");
  if (Bprime0 <= 0.0)
    throw std::domain_error(
        "tmax_bound: hypotheses not satisfied: (u0, u1) must be positive");
  BoundReport r;
  r.variant_theorem = t0 + B0 / (epsilon * Bprime0);
  r.variant_proof = t0 + 4.0 * B0 / (epsilon * Bprime0);
  return r;
}

void attach_observation(BoundReport& report, double t_blow) {
  report.observed_t_blow = t_blow;
  report.bound_respected = t_blow < report.variant_proof;
}

InvariantSetReport verify_invariant_set(const std::vector<DiagnosticRecord>& series,
                                        double tol_I) {
  InvariantSetReport rep;
  if (series.empty()) return rep;
  if (!(series.front().I < 0.0)) {
    rep.violations.push_back({series.front().t, "not applicable: initial Nehari nonnegative"});
    return rep;
  }
  rep.applicable = true;
  rep.nehari_negative_throughout = true;
  rep.bprime_nondecreasing = true;
  rep.xi_positive = true;

  const double xi_tol = 1e-8 * (1.0 + std::abs(series.front().xi));
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& r = series[k];
    if (!(r.I < tol_I)) {
      rep.nehari_negative_throughout = false;
      rep.violations.push_back({r.t, "Nehari functional nonnegative"});
    }
    if (k > 0) {
      const auto& q = series[k - 1];
      if (r.Bprime < q.Bprime - 1e-9 * (1.0 + std::abs(q.Bprime))) {
        rep.bprime_nondecreasing = false;
        rep.violations.push_back({r.t, "B' decreased"});
      }
      if (!(r.xi > -xi_tol)) {
        rep.xi_positive = false;
        rep.violations.push_back({r.t, "xi nonpositive"});
      }
    }
  }
  return rep;
}

namespace {

// second divided difference, valid on nonuniform record times
double second_difference(double t0, double y0, double t1, double y1, double t2,
                         double y2) {
  return 2.0 * ((y2 - y1) / (t2 - t1) - (y1 - y0) / (t1 - t0)) / (t2 - t0);
}

} // namespace

ConcavityReport verify_concavity(const std::vector<DiagnosticRecord>& series,
                                 double epsilon) {
  ConcavityReport rep;
  if (series.size() < 5) return rep;
  for (const auto& r : series)
    if (!(r.B > 0.0)) return rep; // zero solution: not applicable
  rep.applicable = true;
  rep.decreasing = true;
  rep.concave = true;

  const double alpha = epsilon / 4.0;
  std::vector<double> G(series.size());
  for (std::size_t k = 0; k < series.size(); ++k)
    G[k] = std::pow(series[k].B, -alpha);

  const std::size_t start = 3; // initial transient
  for (std::size_t k = start + 1; k < G.size(); ++k) {
    if (!(G[k] < G[k - 1])) {
      rep.decreasing = false;
      if (!rep.first_violation_t) rep.first_violation_t = series[k].t;
    }
  }
  for (std::size_t k = start + 1; k + 1 < G.size(); ++k) {
    const double d2 = second_difference(series[k - 1].t, G[k - 1], series[k].t, G[k],
                                        series[k + 1].t, G[k + 1]);
    if (!(d2 < 0.0)) {
      rep.concave = false;
      if (!rep.first_violation_t) rep.first_violation_t = series[k].t;
    }
  }
  return rep;
}

void fill_concavity_certificates(std::vector<DiagnosticRecord>& series,
                                 double epsilon) {
  if (series.size() < 3) return;
  const double c = (4.0 + epsilon) / 4.0;
  for (std::size_t k = 1; k + 1 < series.size(); ++k) {
    const double Bpp =
        second_difference(series[k - 1].t, series[k - 1].B, series[k].t, series[k].B,
                          series[k + 1].t, series[k + 1].B);
    series[k].concavity_certificate = Bpp * series[k].B - c * series[k].Bprime * series[k].Bprime;
  }
  series.front().concavity_certificate = series[1].concavity_certificate;
  series.back().concavity_certificate = series[series.size() - 2].concavity_certificate;
}

} // namespace kg::diagnostics
