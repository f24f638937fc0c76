#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kg/background.hpp"
#include "kg/field.hpp"
#include "kg/nonlinearity.hpp"

namespace kg {

enum class CaseLabel { CaseI, CaseII, CaseIII, CaseIV, NotApplicable };

std::string to_string(CaseLabel label);

// Evaluation of the blowup theorem's preconditions on concrete initial data.
struct HypothesisReport {
  double E0 = 0.0;
  double I0 = 0.0;
  double uu0 = 0.0;      // (u0, u1)
  double u0_l2sq = 0.0;  // |u0|^2
  double threshold_S = 0.0; // 3 (eps+2) / (mtilde^2 eps) * E0
  bool nehari_negative = false;
  bool pairing_ok = false; // uu0 >= S and E0 > 0
  CaseLabel case_label = CaseLabel::NotApplicable;
  bool background_ok = false;
  bool nonlinearity_ok = false;
  bool theorem_applies = false;
};

HypothesisReport evaluate_hypotheses(const FieldState& initial,
                                     const BackgroundModel& bg,
                                     const NonlinearitySpec& nl, double epsilon,
                                     const CosmologyAudit& audit,
                                     const AdmissibilityReport& admissibility);

// Amplitude sweep exhibiting the positive data floor: below some lambda_c the
// scaled data (lambda u0, lambda u1) has I >= 0 and the theorem cannot apply.
struct AmplitudeFloorReport {
  bool has_floor = false;
  double lambda_lo = 0.0; // I >= 0 at and below this scale
  double lambda_hi = 0.0; // I < 0 at and above this scale
  double lambda_c = 0.0;  // bisected sign change
  double h1_norm_at_floor = 0.0; // sqrt(|u0|^2 + |grad u0|^2) at lambda_c
  bool below_floor_all_nonneg = false;
  std::vector<std::pair<double, double>> sweep; // (lambda, I)
};

AmplitudeFloorReport small_amplitude_exclusion(const FieldState& shape,
                                               const BackgroundModel& bg,
                                               const NonlinearitySpec& nl,
                                               double epsilon,
                                               const std::vector<double>& lambdas);

} // namespace kg
