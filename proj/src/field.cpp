#include "kg/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kg/kernels.hpp"

namespace kg {

double inner(std::span<const double> a, std::span<const double> b, const Grid& grid) {
  if (a.size() != b.size() || a.size() != grid.weights().size())
    throw std::invalid_argument("inner: mismatched grid");
  return kernels::weighted_dot(a, b, grid.weights());
}

std::vector<double> laplacian(const FieldState& state) {
  std::vector<double> out(state.u.size());
  kernels::laplacian(*state.grid, state.u, out);
  return out;
}

double dirichlet_form(std::span<const double> u, const Grid& grid) {
  std::vector<double> lap(u.size());
  kernels::laplacian(grid, u, lap);
  return -kernels::weighted_dot(lap, u, grid.weights());
}

Norms norms(const FieldState& state) {
  const Grid& g = *state.grid;
  Norms out;
  out.l2_u = std::sqrt(std::max(0.0, inner(state.u, state.u, g)));
  out.l2_v = std::sqrt(std::max(0.0, inner(state.v, state.v, g)));
  std::vector<double> du(state.u.size());
  kernels::gradient(g, state.u, du);
  out.l2_grad_u = std::sqrt(std::max(0.0, inner(du, du, g)));
  return out;
}

namespace {

double integral_F(const FieldState& state, const NonlinearitySpec& nl) {
  if (nl.kind() == NonlinearitySpec::Kind::Zero) return 0.0;
  std::vector<double> Fu(state.u.size());
  for (std::size_t j = 0; j < state.u.size(); ++j) Fu[j] = nl.F(state.u[j]);
  return kernels::weighted_sum(Fu, state.grid->weights());
}

double integral_uf(const FieldState& state, const NonlinearitySpec& nl) {
  if (nl.kind() == NonlinearitySpec::Kind::Zero) return 0.0;
  std::vector<double> fu(state.u.size());
  for (std::size_t j = 0; j < state.u.size(); ++j) fu[j] = nl.f(state.u[j]);
  return kernels::weighted_dot(state.u, fu, state.grid->weights());
}

} // namespace

double energy(const FieldState& state, const BackgroundModel& bg,
              const NonlinearitySpec& nl) {
  const Grid& g = *state.grid;
  const auto e = bg.eval(state.t);
  const double m2 = bg.m() * bg.m();
  const double grad2 = dirichlet_form(state.u, g);
  return 0.5 * (inner(state.v, state.v, g) + m2 * inner(state.u, state.u, g) +
                grad2 / (e.a * e.a) - 2.0 * integral_F(state, nl));
}

double nehari(const FieldState& state, const BackgroundModel& bg,
              const NonlinearitySpec& nl) {
  const Grid& g = *state.grid;
  const auto e = bg.eval(state.t);
  const double m2 = bg.m() * bg.m();
  const double mt2 = std::min(1.0, bg.m()) * std::min(1.0, bg.m());
  const double grad2 = dirichlet_form(state.u, g);
  return m2 * inner(state.u, state.u, g) + grad2 / (e.a * e.a) +
         bg.n() * (e.adot / e.a) * mt2 * inner(state.u, state.v, g) -
         integral_uf(state, nl);
}

} // namespace kg
