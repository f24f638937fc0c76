#include "kg/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kg/kernels.hpp"

namespace kg {

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::CaseI: return "case_i";
    case CaseLabel::CaseII: return "case_ii";
    case CaseLabel::CaseIII: return "case_iii";
    case CaseLabel::CaseIV: return "case_iv";
    case CaseLabel::NotApplicable: return "not_applicable";
  }
  return "?";
}

HypothesisReport evaluate_hypotheses(const FieldState& initial,
                                     const BackgroundModel& bg,
                                     const NonlinearitySpec& nl, double epsilon,
                                     const CosmologyAudit& audit,
                                     const AdmissibilityReport& admissibility) {
  const Grid& g = *initial.grid;
  HypothesisReport rep;
  rep.E0 = energy(initial, bg, nl);
  rep.I0 = nehari(initial, bg, nl);
  rep.uu0 = inner(initial.u, initial.v, g);
  rep.u0_l2sq = inner(initial.u, initial.u, g);
  const double mt = std::min(1.0, bg.m());
  rep.threshold_S = 3.0 * (epsilon + 2.0) / (mt * mt * epsilon) * rep.E0;
  rep.nehari_negative = rep.I0 < 0.0;
  rep.pairing_ok = rep.uu0 >= rep.threshold_S && rep.E0 > 0.0;
  rep.background_ok = audit.all_ok();
  rep.nonlinearity_ok = admissibility.admissible();

  // Table 1 partition; negative-energy data is out of scope
  if (!rep.nehari_negative || !(rep.E0 > 0.0)) {
    rep.case_label = CaseLabel::NotApplicable;
  } else if (rep.uu0 >= rep.threshold_S) {
    rep.case_label = rep.u0_l2sq >= rep.threshold_S ? CaseLabel::CaseII
                                                    : CaseLabel::CaseIII;
  } else {
    rep.case_label = rep.u0_l2sq >= rep.threshold_S ? CaseLabel::CaseI
                                                    : CaseLabel::CaseIV;
  }

  rep.theorem_applies = rep.nehari_negative && rep.pairing_ok &&
                        rep.background_ok && rep.nonlinearity_ok;
  return rep;
}

namespace {

double nehari_scaled(const FieldState& shape, const BackgroundModel& bg,
                     const NonlinearitySpec& nl, double lambda) {
  FieldState s = shape;
  for (auto& x : s.u) x *= lambda;
  for (auto& x : s.v) x *= lambda;
  return nehari(s, bg, nl);
}

} // namespace

AmplitudeFloorReport small_amplitude_exclusion(const FieldState& shape,
                                               const BackgroundModel& bg,
                                               const NonlinearitySpec& nl,
                                               double epsilon,
                                               const std::vector<double>& lambdas) {
  (void)epsilon;
  if (kernels::linf(shape.u) == 0.0 && kernels::linf(shape.v) == 0.0)
    throw std::invalid_argument("small_amplitude_exclusion: shape is identically zero");

  std::vector<double> ls = lambdas;
  std::sort(ls.begin(), ls.end(), std::greater<double>());

  AmplitudeFloorReport rep;
  for (double l : ls) rep.sweep.emplace_back(l, nehari_scaled(shape, bg, nl, l));

  // largest descending pair where I flips from negative to nonnegative
  for (std::size_t i = 0; i + 1 < rep.sweep.size(); ++i) {
    if (rep.sweep[i].second < 0.0 && rep.sweep[i + 1].second >= 0.0) {
      rep.has_floor = true;
      rep.lambda_hi = rep.sweep[i].first;
      rep.lambda_lo = rep.sweep[i + 1].first;
      break;
    }
  }
  if (!rep.has_floor) return rep;

  // bisect the sign change
  double lo = rep.lambda_lo, hi = rep.lambda_hi;
  for (int it = 0; it < 80 && (hi - lo) > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (nehari_scaled(shape, bg, nl, mid) < 0.0)
      hi = mid;
    else
      lo = mid;
  }
  rep.lambda_c = 0.5 * (lo + hi);

  const Norms nm = norms(shape);
  rep.h1_norm_at_floor =
      rep.lambda_c * std::sqrt(nm.l2_u * nm.l2_u + nm.l2_grad_u * nm.l2_grad_u);

  rep.below_floor_all_nonneg = true;
  for (const auto& [l, I] : rep.sweep)
    if (l < rep.lambda_c && I < 0.0) rep.below_floor_all_nonneg = false;
  return rep;
}

} // namespace kg
