#pragma once

#include <optional>
#include <string>

namespace kg {

struct AdmissibilityReport {
  bool epsilon_condition = false;   // s f(s) >= (2+eps) F(s)
  bool lipschitz_exponent_ok = false;
  bool exponent_constraint_vacuous = false; // n <= 2: the 2/(n-2) bound does not apply
  double alpha_f = 0.0;
  double exponent_bound = 0.0;      // 2/(n-2) for n >= 3
  std::optional<double> counterexample_s; // sample violating the epsilon condition

  bool admissible() const { return epsilon_condition && lipschitz_exponent_ok; }
};

// Source term f, primitive F, and the admissibility parameters.
// Immutable; freely shareable.
class NonlinearitySpec {
 public:
  enum class Kind { Power, FocusingPower, DefocusingPower, Zero };

  // Power requires odd integer p so s^p is defined for s < 0;
  // FocusingPower/DefocusingPower take any real p > 1.
  static NonlinearitySpec power(double p, double epsilon);
  static NonlinearitySpec focusing_power(double p, double epsilon);
  static NonlinearitySpec defocusing_power(double p, double epsilon);
  static NonlinearitySpec zero(double epsilon);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  double epsilon() const { return epsilon_; }
  double alpha_f() const { return alpha_f_; } // Lipschitz exponent, p - 1 for powers

  double f(double s) const;
  double F(double s) const;

  AdmissibilityReport check_admissibility(int n) const;

 private:
  NonlinearitySpec(Kind kind, double p, double epsilon);

  Kind kind_;
  double p_;
  double epsilon_;
  double alpha_f_;
};

std::string to_string(NonlinearitySpec::Kind kind);

} // namespace kg
