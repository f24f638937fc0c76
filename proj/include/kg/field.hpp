#pragma once

#include <span>
#include <vector>

#include "kg/background.hpp"
#include "kg/grid.hpp"
#include "kg/nonlinearity.hpp"

namespace kg {

struct Norms {
  double l2_u = 0.0;
  double l2_v = 0.0;
  double l2_grad_u = 0.0;
};

// L2 inner product (u, v) by grid quadrature. Throws on mismatched sizes.
double inner(std::span<const double> a, std::span<const double> b, const Grid& grid);

std::vector<double> laplacian(const FieldState& state);

// Discrete Dirichlet form -(u, Lap u); agrees with |grad u|^2 to O(dx^2)
// and is the gradient energy the discrete flow dissipates exactly.
double dirichlet_form(std::span<const double> u, const Grid& grid);

// (||u||, ||u_t||, ||grad u||); gradient by the centered first-derivative stencil.
Norms norms(const FieldState& state);

// E = 1/2 (||u_t||^2 + m^2 ||u||^2 + a^-2 |grad u|^2 - 2 Int F(u))
double energy(const FieldState& state, const BackgroundModel& bg,
              const NonlinearitySpec& nl);

// I = Int( m^2 u^2 + a^-2 |grad u|^2 + n (adot/a) mtilde^2 u u_t - u f(u) )
double nehari(const FieldState& state, const BackgroundModel& bg,
              const NonlinearitySpec& nl);

} // namespace kg
