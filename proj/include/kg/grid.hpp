#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

namespace kg {

// Spatial discretization descriptor. Line1D covers [-R, R] (n must be 1),
// RadialND covers [0, R] for radially symmetric fields in n >= 2 dimensions.
struct GridSpec {
  enum class Geometry { Line1D, RadialND };

  Geometry geometry = Geometry::Line1D;
  int n = 1;             // spatial dimension
  double radius = 1.0;   // R
  int points = 64;       // number of cells, >= 16
  bool periodic = false; // Line1D only; used by the ODE-oracle tests

  double dx() const {
    return geometry == Geometry::Line1D ? 2.0 * radius / points
                                        : radius / points;
  }
  int nodes() const { return periodic ? points : points + 1; }

  void validate() const;
};

// GridSpec plus cached node coordinates and quadrature weights.
// Trapezoidal weights; RadialND carries the surface measure w_j ~ omega_n r^(n-1) dx.
class Grid {
 public:
  explicit Grid(GridSpec spec);

  const GridSpec& spec() const { return spec_; }
  int nodes() const { return static_cast<int>(coord_.size()); }
  double dx() const { return spec_.dx(); }
  const std::vector<double>& coords() const { return coord_; }
  const std::vector<double>& weights() const { return weight_; }
  double coord(int j) const { return coord_[j]; }
  double weight(int j) const { return weight_[j]; }

 private:
  GridSpec spec_;
  std::vector<double> coord_;
  std::vector<double> weight_;
};

// surface area of the unit (n-1)-sphere, 2 pi^(n/2) / Gamma(n/2)
double unit_sphere_area(int n);

// Discretized (u, u_t) at one time.
struct FieldState {
  std::shared_ptr<const Grid> grid;
  double t = 0.0;
  std::vector<double> u;
  std::vector<double> v;

  static FieldState zero(std::shared_ptr<const Grid> grid, double t);
};

// Smooth compact bump u0 = A (1 - (r/rho)^2)^4 for r <= rho, u1 = B * (same bump).
FieldState bump_initial_data(std::shared_ptr<const Grid> grid, double t0,
                             double A, double B, double rho);

} // namespace kg
