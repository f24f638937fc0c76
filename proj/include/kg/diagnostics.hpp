#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kg/solver.hpp"

namespace kg::diagnostics {

// Blowup-time bounds from B(t0) and B'(t0).
struct BoundReport {
  double variant_theorem = 0.0; // t0 + B0 / (eps B'0)
  double variant_proof = 0.0;   // t0 + 4 B0 / (eps B'0), the tangent-line zero
  std::optional<double> observed_t_blow;
  bool bound_respected = false; // observed < variant_proof, when observed exists
};

// Throws std::domain_error when Bprime0 <= 0 (the (u0, u1) > 0 hypothesis fails).
BoundReport tmax_bound(double B0, double Bprime0, double epsilon, double t0);

void attach_observation(BoundReport& report, double t_blow);

struct Violation {
  double t;
  std::string what;
};

struct InvariantSetReport {
  bool applicable = false; // initial Nehari must be negative
  bool nehari_negative_throughout = false;
  bool bprime_nondecreasing = false;
  bool xi_positive = false;
  std::vector<Violation> violations;

  bool all_ok() const {
    return applicable && nehari_negative_throughout && bprime_nondecreasing &&
           xi_positive;
  }
};

// Checks I < tol_I at every record, B' nondecreasing, and xi > -tol after t0.
InvariantSetReport verify_invariant_set(const std::vector<DiagnosticRecord>& series,
                                        double tol_I = 1e-10);

struct ConcavityReport {
  bool applicable = false; // needs >= 5 records and B > 0
  bool decreasing = false;
  bool concave = false;
  std::optional<double> first_violation_t;

  bool all_ok() const { return applicable && decreasing && concave; }
};

// G = B^(-eps/4) must be strictly decreasing with negative discrete second
// differences at interior records, after a 3-record transient.
ConcavityReport verify_concavity(const std::vector<DiagnosticRecord>& series,
                                 double epsilon);

// Fills concavity_certificate = B'' B - (4+eps)/4 B'^2 with B'' from second
// divided differences of the recorded B series.
void fill_concavity_certificates(std::vector<DiagnosticRecord>& series,
                                 double epsilon);

} // namespace kg::diagnostics
