#include "kg/grid.hpp"

#include <cmath>
#include <numbers>

namespace kg {

void GridSpec::validate() const {
  if (points < 16) throw std::invalid_argument("grid: points must be >= 16");
  if (radius <= 0.0) throw std::invalid_argument("grid: radius must be positive");
  if (geometry == Geometry::Line1D) {
    if (n != 1) throw std::invalid_argument("grid: Line1D requires n = 1");
  } else {
    if (n < 2) throw std::invalid_argument("grid: RadialND requires n >= 2");
    if (periodic) throw std::invalid_argument("grid: periodic only supported on Line1D");
  }
}

double unit_sphere_area(int n) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

Grid::Grid(GridSpec spec) : spec_(spec) {
  spec_.validate();
  const int N = spec_.nodes();
  const double h = spec_.dx();
  coord_.resize(N);
  weight_.resize(N);
  if (spec_.geometry == GridSpec::Geometry::Line1D) {
    for (int j = 0; j < N; ++j) coord_[j] = -spec_.radius + j * h;
    for (int j = 0; j < N; ++j) weight_[j] = h;
    if (!spec_.periodic) {
      weight_.front() = 0.5 * h;
      weight_.back() = 0.5 * h;
    }
  } else {
    const double omega = unit_sphere_area(spec_.n);
    for (int j = 0; j < N; ++j) {
      coord_[j] = j * h;
      weight_[j] = omega * std::pow(coord_[j], spec_.n - 1) * h;
    }
    weight_.front() *= 0.5; // zero already for n >= 2
    weight_.back() *= 0.5;
  }
}

FieldState FieldState::zero(std::shared_ptr<const Grid> grid, double t) {
  FieldState s;
  s.t = t;
  s.u.assign(grid->nodes(), 0.0);
  s.v.assign(grid->nodes(), 0.0);
  s.grid = std::move(grid);
  return s;
}

FieldState bump_initial_data(std::shared_ptr<const Grid> grid, double t0,
                             double A, double B, double rho) {
  if (rho <= 0.0) throw std::invalid_argument("bump: rho must be positive");
  FieldState s = FieldState::zero(grid, t0);
  for (int j = 0; j < grid->nodes(); ++j) {
    const double r = std::abs(grid->coord(j));
    if (r < rho) {
      const double q = 1.0 - (r / rho) * (r / rho);
      const double w = q * q * q * q;
      s.u[j] = A * w;
      s.v[j] = B * w;
    }
  }
  // Dirichlet boundary
  if (!grid->spec().periodic) {
    s.u.back() = s.v.back() = 0.0;
    if (grid->spec().geometry == GridSpec::Geometry::Line1D)
      s.u.front() = s.v.front() = 0.0;
  }
  return s;
}

} // namespace kg
