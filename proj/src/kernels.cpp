#include "kg/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kg::kernels {

namespace {
// below this size the fork/join overhead dominates at 1k-point grids
constexpr std::size_t kAutoThreshold = 8192;
}

Exec& exec_mode() {
  static Exec mode = Exec::Auto;
  return mode;
}

bool use_parallel(std::size_t n) {
#ifndef _OPENMP
  (void)n;
  return false;
#else
  switch (exec_mode()) {
    case Exec::Serial: return false;
    case Exec::OpenMP: return true;
    case Exec::Auto: return n >= kAutoThreshold;
  }
  return false;
#endif
}

void axpy_serial(std::span<const double> x, double s, std::span<const double> y,
                 std::span<double> out) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + s * y[i];
}

void axpy_omp(std::span<const double> x, double s, std::span<const double> y,
              std::span<double> out) {
  const long n = static_cast<long>(x.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = x[i] + s * y[i];
}

void axpy(std::span<const double> x, double s, std::span<const double> y,
          std::span<double> out) {
  if (use_parallel(x.size()))
    axpy_omp(x, s, y, out);
  else
    axpy_serial(x, s, y, out);
}

void rk4_combine_serial(std::span<const double> x, std::span<const double> k1,
                        std::span<const double> k2, std::span<const double> k3,
                        std::span<const double> k4, double dt, std::span<double> out) {
  const std::size_t n = x.size();
  const double c = dt / 6.0;
  for (std::size_t i = 0; i < n; ++i)
    out[i] = x[i] + c * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void rk4_combine_omp(std::span<const double> x, std::span<const double> k1,
                     std::span<const double> k2, std::span<const double> k3,
                     std::span<const double> k4, double dt, std::span<double> out) {
  const long n = static_cast<long>(x.size());
  const double c = dt / 6.0;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i)
    out[i] = x[i] + c * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void rk4_combine(std::span<const double> x, std::span<const double> k1,
                 std::span<const double> k2, std::span<const double> k3,
                 std::span<const double> k4, double dt, std::span<double> out) {
  if (use_parallel(x.size()))
    rk4_combine_omp(x, k1, k2, k3, k4, dt, out);
  else
    rk4_combine_serial(x, k1, k2, k3, k4, dt, out);
}

void laplacian_line_serial(std::span<const double> u, double dx, bool periodic,
                           std::span<double> out) {
  const long n = static_cast<long>(u.size());
  const double idx2 = 1.0 / (dx * dx);
  if (periodic) {
    for (long j = 0; j < n; ++j) {
      const double um = u[(j + n - 1) % n];
      const double up = u[(j + 1) % n];
      out[j] = (um - 2.0 * u[j] + up) * idx2;
    }
    return;
  }
  out[0] = 0.0;
  out[n - 1] = 0.0;
  for (long j = 1; j < n - 1; ++j)
    out[j] = (u[j - 1] - 2.0 * u[j] + u[j + 1]) * idx2;
}

void laplacian_line_omp(std::span<const double> u, double dx, bool periodic,
                        std::span<double> out) {
  const long n = static_cast<long>(u.size());
  const double idx2 = 1.0 / (dx * dx);
  if (periodic) {
#pragma omp parallel for schedule(static)
    for (long j = 0; j < n; ++j) {
      const double um = u[(j + n - 1) % n];
      const double up = u[(j + 1) % n];
      out[j] = (um - 2.0 * u[j] + up) * idx2;
    }
    return;
  }
  out[0] = 0.0;
  out[n - 1] = 0.0;
#pragma omp parallel for schedule(static)
  for (long j = 1; j < n - 1; ++j)
    out[j] = (u[j - 1] - 2.0 * u[j] + u[j + 1]) * idx2;
}

void laplacian_radial_serial(std::span<const double> u, double dx, int n,
                             std::span<double> out) {
  const long N = static_cast<long>(u.size());
  const double idx2 = 1.0 / (dx * dx);
  out[0] = 2.0 * n * (u[1] - u[0]) * idx2;
  out[N - 1] = 0.0;
  for (long j = 1; j < N - 1; ++j) {
    const double urr = (u[j - 1] - 2.0 * u[j] + u[j + 1]) * idx2;
    const double ur = (u[j + 1] - u[j - 1]) / (2.0 * dx);
    out[j] = urr + (n - 1) * ur / (j * dx);
  }
}

void laplacian_radial_omp(std::span<const double> u, double dx, int n,
                          std::span<double> out) {
  const long N = static_cast<long>(u.size());
  const double idx2 = 1.0 / (dx * dx);
  out[0] = 2.0 * n * (u[1] - u[0]) * idx2;
  out[N - 1] = 0.0;
#pragma omp parallel for schedule(static)
  for (long j = 1; j < N - 1; ++j) {
    const double urr = (u[j - 1] - 2.0 * u[j] + u[j + 1]) * idx2;
    const double ur = (u[j + 1] - u[j - 1]) / (2.0 * dx);
    out[j] = urr + (n - 1) * ur / (j * dx);
  }
}

void laplacian(const Grid& grid, std::span<const double> u, std::span<double> out) {
  const auto& spec = grid.spec();
  const bool par = use_parallel(u.size());
  if (spec.geometry == GridSpec::Geometry::Line1D) {
    if (par)
      laplacian_line_omp(u, grid.dx(), spec.periodic, out);
    else
      laplacian_line_serial(u, grid.dx(), spec.periodic, out);
  } else {
    if (par)
      laplacian_radial_omp(u, grid.dx(), spec.n, out);
    else
      laplacian_radial_serial(u, grid.dx(), spec.n, out);
  }
}

void gradient(const Grid& grid, std::span<const double> u, std::span<double> out) {
  const long N = static_cast<long>(u.size());
  const double dx = grid.dx();
  if (grid.spec().periodic) {
    for (long j = 0; j < N; ++j)
      out[j] = (u[(j + 1) % N] - u[(j + N - 1) % N]) / (2.0 * dx);
    return;
  }
  for (long j = 1; j < N - 1; ++j) out[j] = (u[j + 1] - u[j - 1]) / (2.0 * dx);
  if (grid.spec().geometry == GridSpec::Geometry::RadialND) {
    out[0] = 0.0; // even reflection at the origin
  } else {
    out[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dx);
  }
  out[N - 1] = (3.0 * u[N - 1] - 4.0 * u[N - 2] + u[N - 3]) / (2.0 * dx);
}

double weighted_dot(std::span<const double> a, std::span<const double> b,
                    std::span<const double> w) {
  double sum = 0.0, comp = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double term = w[i] * a[i] * b[i] - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum;
}

double weighted_sum(std::span<const double> a, std::span<const double> w) {
  double sum = 0.0, comp = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double term = w[i] * a[i] - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum;
}

double linf(std::span<const double> u) {
  double m = 0.0;
  for (double x : u) m = std::max(m, std::abs(x));
  return m;
}

bool all_finite(std::span<const double> u) {
  for (double x : u)
    if (!std::isfinite(x)) return false;
  return true;
}

} // namespace kg::kernels
