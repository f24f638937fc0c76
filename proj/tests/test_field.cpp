#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include "kg/field.hpp"

using namespace kg;

namespace {

std::shared_ptr<Grid> make_grid(GridSpec::Geometry geom, int n, double R, int pts,
                                bool periodic = false) {
  return std::make_shared<Grid>(GridSpec{geom, n, R, pts, periodic});
}

// random interior data with Dirichlet boundary rows zeroed
std::vector<double> random_field(const Grid& grid, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> u(grid.nodes());
  for (auto& e : u) e = dist(rng);
  u.back() = 0.0;
  if (grid.spec().geometry == GridSpec::Geometry::Line1D) u.front() = 0.0;
  return u;
}

} // namespace

TEST_CASE("quadrature integrates the constant 1 to the domain volume") {
  // line [-R, R]: length 2R
  {
    auto g = make_grid(GridSpec::Geometry::Line1D, 1, 3.0, 256);
    std::vector<double> one(g->nodes(), 1.0);
    CHECK(inner(one, one, *g) == doctest::Approx(6.0).epsilon(1e-12));
  }
  // radial n = 3 ball of radius R: 4/3 pi R^3 (trapezoid is exact: r^2 weight
  // times 1 is quadratic... not exact; second-order accurate)
  {
    auto g = make_grid(GridSpec::Geometry::RadialND, 3, 2.0, 512);
    std::vector<double> one(g->nodes(), 1.0);
    const double vol = 4.0 / 3.0 * std::numbers::pi * 8.0;
    CHECK(inner(one, one, *g) == doctest::Approx(vol).epsilon(1e-5));
  }
}

TEST_CASE("inner throws on mismatched sizes") {
  auto g = make_grid(GridSpec::Geometry::Line1D, 1, 1.0, 32);
  std::vector<double> a(g->nodes(), 1.0), b(g->nodes() + 1, 1.0);
  CHECK_THROWS_AS((void)inner(a, b, *g), std::invalid_argument);
}

TEST_CASE("discrete laplacian is self-adjoint under the grid quadrature") {
  // (Lap u, v) = (u, Lap v) exactly for line grids and radial n = 3
  for (auto geom : {GridSpec::Geometry::Line1D, GridSpec::Geometry::RadialND}) {
    const int n = geom == GridSpec::Geometry::Line1D ? 1 : 3;
    auto g = make_grid(geom, n, 2.0, 200);
    FieldState s = FieldState::zero(g, 0.0);
    s.u = random_field(*g, 21);
    FieldState w = FieldState::zero(g, 0.0);
    w.u = random_field(*g, 22);
    const auto Lu = laplacian(s);
    FieldState tmp = s;
    tmp.u = w.u;
    const auto Lv = laplacian(tmp);
    const double lhs = inner(Lu, w.u, *g);
    const double rhs = inner(s.u, Lv, *g);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("dirichlet form is positive and O(dx^2)-consistent with the gradient norm") {
  auto run = [](int pts) {
    auto g = make_grid(GridSpec::Geometry::Line1D, 1, 2.0, pts);
    FieldState s = FieldState::zero(g, 0.0);
    for (int j = 0; j < g->nodes(); ++j) {
      const double x = g->coord(j);
      s.u[j] = std::sin(std::numbers::pi * (x + 2.0) / 4.0); // zero at both ends
    }
    const double dir = dirichlet_form(s.u, *g);
    const Norms nn = norms(s);
    return std::abs(dir - nn.l2_grad_u * nn.l2_grad_u);
  };
  const double err1 = run(128), err2 = run(256);
  CHECK(err1 > 0.0);
  CHECK(err1 / err2 == doctest::Approx(4.0).epsilon(0.25)); // second order
  auto g = make_grid(GridSpec::Geometry::RadialND, 3, 2.0, 128);
  const auto u = random_field(*g, 33);
  CHECK(dirichlet_form(u, *g) > 0.0);
}

TEST_CASE("energy of a known state matches the hand formula") {
  // periodic constant state: gradient terms vanish, integrals are V * pointwise
  auto g = make_grid(GridSpec::Geometry::Line1D, 1, 1.0, 64, /*periodic=*/true);
  FieldState s = FieldState::zero(g, 0.0);
  const double A = 0.7, B = -0.3;
  for (auto& e : s.u) e = A;
  for (auto& e : s.v) e = B;
  double V = 0.0;
  for (double w : g->weights()) V += w;

  const auto bg = BackgroundModel::minkowski(1, 2.0); // m = 2
  const auto nl = NonlinearitySpec::focusing_power(3.0, 2.0);
  const double expected =
      0.5 * V * (B * B + 4.0 * A * A - 2.0 * (std::pow(A, 4.0) / 4.0));
  CHECK(energy(s, bg, nl) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("nehari of a known state matches the hand formula") {
  auto g = make_grid(GridSpec::Geometry::Line1D, 1, 1.0, 64, /*periodic=*/true);
  FieldState s = FieldState::zero(g, 1.0);
  const double A = 0.9, B = 0.4;
  for (auto& e : s.u) e = A;
  for (auto& e : s.v) e = B;
  double V = 0.0;
  for (double w : g->weights()) V += w;

  const auto nl = NonlinearitySpec::focusing_power(3.0, 2.0);

  SUBCASE("minkowski: no cross term") {
    const auto bg = BackgroundModel::minkowski(1, 2.0);
    const double expected = V * (4.0 * A * A - std::pow(A, 4.0));
    CHECK(nehari(s, bg, nl) == doctest::Approx(expected).epsilon(1e-13));
  }
  SUBCASE("de sitter: cross term n (adot/a) mtilde^2 u u_t, mtilde = min(1, m)") {
    const double H = 0.05;
    const auto bg = BackgroundModel::de_sitter(H, 1, 0.5); // mtilde = 0.5
    const double a = std::exp(H * 1.0);
    const double expected =
        V * (0.25 * A * A + H * 0.25 * A * B - std::pow(A, 4.0));
    (void)a;
    CHECK(nehari(s, bg, nl) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("norms on a constant periodic state") {
  auto g = make_grid(GridSpec::Geometry::Line1D, 1, 1.5, 48, /*periodic=*/true);
  FieldState s = FieldState::zero(g, 0.0);
  for (auto& e : s.u) e = 2.0;
  for (auto& e : s.v) e = -1.0;
  double V = 0.0;
  for (double w : g->weights()) V += w;
  const Norms nn = norms(s);
  CHECK(nn.l2_u == doctest::Approx(std::sqrt(4.0 * V)).epsilon(1e-13));
  CHECK(nn.l2_v == doctest::Approx(std::sqrt(1.0 * V)).epsilon(1e-13));
  CHECK(nn.l2_grad_u == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("bump initial data: profile, support, and boundary rows") {
  auto g = make_grid(GridSpec::Geometry::RadialND, 3, 4.0, 256);
  const double A = 2.0, B = 0.5, rho = 1.0;
  const FieldState s = bump_initial_data(g, 1.0, A, B, rho);
  CHECK(s.t == 1.0);
  CHECK(s.u[0] == doctest::Approx(A).epsilon(1e-15)); // r = 0: full amplitude
  for (int j = 0; j < g->nodes(); ++j) {
    const double r = g->coord(j);
    if (r >= rho) {
      CHECK(s.u[j] == 0.0);
      CHECK(s.v[j] == 0.0);
    } else {
      const double q = 1.0 - (r / rho) * (r / rho);
      const double w = q * q * q * q;
      CHECK(s.u[j] == doctest::Approx(A * w).epsilon(1e-14));
      CHECK(s.v[j] == doctest::Approx(B * w).epsilon(1e-14));
    }
  }
}
