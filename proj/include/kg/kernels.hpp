#pragma once

#include <cstddef>
#include <span>

#include "kg/grid.hpp"

namespace kg::kernels {

// Execution policy for the elementwise kernels. Auto picks OpenMP only for
// grids large enough to amortize the fork/join overhead; reductions are
// always serial (Kahan) so per-run results do not depend on thread count.
enum class Exec { Auto, Serial, OpenMP };

Exec& exec_mode();
bool use_parallel(std::size_t n);

// --- elementwise kernels: serial reference + OpenMP variant + dispatcher ---

// out = x + s * y
void axpy_serial(std::span<const double> x, double s, std::span<const double> y,
                 std::span<double> out);
void axpy_omp(std::span<const double> x, double s, std::span<const double> y,
              std::span<double> out);
void axpy(std::span<const double> x, double s, std::span<const double> y,
          std::span<double> out);

// out = x + (dt/6) (k1 + 2 k2 + 2 k3 + k4)
void rk4_combine_serial(std::span<const double> x, std::span<const double> k1,
                        std::span<const double> k2, std::span<const double> k3,
                        std::span<const double> k4, double dt, std::span<double> out);
void rk4_combine_omp(std::span<const double> x, std::span<const double> k1,
                     std::span<const double> k2, std::span<const double> k3,
                     std::span<const double> k4, double dt, std::span<double> out);
void rk4_combine(std::span<const double> x, std::span<const double> k1,
                 std::span<const double> k2, std::span<const double> k3,
                 std::span<const double> k4, double dt, std::span<double> out);

// Second-order Laplacian. Boundary rows of `out` are set to zero
// (Dirichlet ghost values), except in periodic mode where indices wrap.
void laplacian_line_serial(std::span<const double> u, double dx, bool periodic,
                           std::span<double> out);
void laplacian_line_omp(std::span<const double> u, double dx, bool periodic,
                        std::span<double> out);
// u_rr + (n-1)/r u_r with the symmetric origin stencil 2n (u1 - u0)/dx^2.
void laplacian_radial_serial(std::span<const double> u, double dx, int n,
                             std::span<double> out);
void laplacian_radial_omp(std::span<const double> u, double dx, int n,
                          std::span<double> out);
void laplacian(const Grid& grid, std::span<const double> u, std::span<double> out);

// Centered first derivative, one-sided at the ends (even reflection at r=0).
void gradient(const Grid& grid, std::span<const double> u, std::span<double> out);

// --- reductions (deterministic, serial Kahan) ---

double weighted_dot(std::span<const double> a, std::span<const double> b,
                    std::span<const double> w);
double weighted_sum(std::span<const double> a, std::span<const double> w);
double linf(std::span<const double> u);
bool all_finite(std::span<const double> u);

} // namespace kg::kernels
