#include "kg/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>

namespace kg {

NonlinearitySpec::NonlinearitySpec(Kind kind, double p, double epsilon)
    : kind_(kind), p_(p), epsilon_(epsilon) {
  if (epsilon <= 0.0) throw std::invalid_argument("nonlinearity: epsilon must be positive");
  if (kind != Kind::Zero && p <= 1.0)
    throw std::invalid_argument("nonlinearity: p must be > 1");
  alpha_f_ = kind == Kind::Zero ? 0.0 : p - 1.0;
}

NonlinearitySpec NonlinearitySpec::power(double p, double epsilon) {
  const double r = std::round(p);
  if (p != r || std::fmod(r, 2.0) != 1.0)
    throw std::invalid_argument("nonlinearity: Power requires odd integer p");
  return NonlinearitySpec(Kind::Power, p, epsilon);
}

NonlinearitySpec NonlinearitySpec::focusing_power(double p, double epsilon) {
  return NonlinearitySpec(Kind::FocusingPower, p, epsilon);
}

NonlinearitySpec NonlinearitySpec::defocusing_power(double p, double epsilon) {
  return NonlinearitySpec(Kind::DefocusingPower, p, epsilon);
}

NonlinearitySpec NonlinearitySpec::zero(double epsilon) {
  return NonlinearitySpec(Kind::Zero, 0.0, epsilon);
}

double NonlinearitySpec::f(double s) const {
  switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::Power:           // s^p with odd p, equals |s|^(p-1) s
    case Kind::FocusingPower:
      return std::pow(std::abs(s), p_ - 1.0) * s;
    case Kind::DefocusingPower:
      return -std::pow(std::abs(s), p_ - 1.0) * s;
  }
  return 0.0;
}

double NonlinearitySpec::F(double s) const {
  switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::Power:
    case Kind::FocusingPower:
      return std::pow(std::abs(s), p_ + 1.0) / (p_ + 1.0);
    case Kind::DefocusingPower:
      return -std::pow(std::abs(s), p_ + 1.0) / (p_ + 1.0);
  }
  return 0.0;
}

AdmissibilityReport NonlinearitySpec::check_admissibility(int n) const {
  if (n < 1) throw std::invalid_argument("nonlinearity: n must be >= 1");
  AdmissibilityReport rep;
  rep.alpha_f = alpha_f_;
  switch (kind_) {
    case Kind::Zero:
      rep.epsilon_condition = true; // s f(s) = 0 = (2+eps) F(s)
      break;
    case Kind::Power:
    case Kind::FocusingPower:
      rep.epsilon_condition = p_ + 1.0 >= 2.0 + epsilon_;
      break;
    case Kind::DefocusingPower: {
      rep.epsilon_condition = false;
      // attach a violating sample when one exists (p + 1 > 2 + eps)
      const double s = 1.0;
      if (s * f(s) < (2.0 + epsilon_) * F(s)) rep.counterexample_s = s;
      break;
    }
  }
  if (n <= 2) {
    rep.exponent_constraint_vacuous = true;
    rep.lipschitz_exponent_ok = true;
  } else {
    rep.exponent_bound = 2.0 / (n - 2);
    rep.lipschitz_exponent_ok = alpha_f_ <= rep.exponent_bound;
  }
  return rep;
}

std::string to_string(NonlinearitySpec::Kind kind) {
  switch (kind) {
    case NonlinearitySpec::Kind::Power: return "power";
    case NonlinearitySpec::Kind::FocusingPower: return "focusing_power";
    case NonlinearitySpec::Kind::DefocusingPower: return "defocusing_power";
    case NonlinearitySpec::Kind::Zero: return "zero";
  }
  return "?";
}

} // namespace kg
