#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kg {

// Outcome of the cosmology admissibility checks at a given epsilon and [t0, t_end].
struct CosmologyAudit {
  double hubble_ratio_at_t0 = 0.0;
  double epsilon_bound = 0.0; // epsilon / (6 n)
  bool initial_time_ok = false;
  bool curved_mass_positive = false;
  bool curved_mass_nonincreasing = false;
  double min_admissible_t0 = 0.0; // +inf when the cosmology cannot satisfy the bound

  bool all_ok() const {
    return initial_time_ok && curved_mass_positive && curved_mass_nonincreasing;
  }
};

// Expansion factor family a(t) with derivatives and derived scalars.
// Immutable after construction; safe to share across threads.
class BackgroundModel {
 public:
  enum class Kind { Minkowski, DeSitter, PowerLaw, Tabulated };

  struct Eval {
    double a, adot, addot;
  };

  static BackgroundModel minkowski(int n, double m);
  static BackgroundModel de_sitter(double H, int n, double m);
  static BackgroundModel power_law(double k, int n, double m);
  static BackgroundModel tabulated(std::vector<std::pair<double, double>> samples,
                                   int n, double m);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  double m() const { return m_; }
  double hubble_constant() const { return H_; }   // DeSitter only
  double power_exponent() const { return k_; }    // PowerLaw only
  const std::vector<std::pair<double, double>>& samples() const { return samples_; }

  Eval eval(double t) const;
  double hubble_ratio(double t) const;
  double curved_mass_squared(double t) const;

  // Smallest t0 >= 0 with hubble_ratio(t) <= eps/(6n) for all t >= t0.
  // Throws for DeSitter with H > eps/(6n).
  double min_admissible_t0(double epsilon) const;

  CosmologyAudit audit(double epsilon, double t0, double t_end,
                       int samples = 1024) const;

 private:
  BackgroundModel(Kind kind, int n, double m) : kind_(kind), n_(n), m_(m) {}

  Kind kind_;
  int n_;
  double m_;
  double H_ = 0.0;
  double k_ = 0.0;
  std::vector<std::pair<double, double>> samples_;
};

std::string to_string(BackgroundModel::Kind kind);

} // namespace kg
