// Times the serial reference kernels against their OpenMP variants over a
// range of grid sizes. Prints one row per (kernel, size) with the speedup.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kg/kernels.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double time_of(const std::function<void()>& fn, int reps) {
  fn(); // warm up
  const auto start = clock_type::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(clock_type::now() - start).count() / reps;
}

void bench_size(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(n), y(n), k1(n), k2(n), k3(n), k4(n), out(n);
  for (auto* v : {&x, &y, &k1, &k2, &k3, &k4})
    for (auto& e : *v) e = dist(rng);

  const int reps = n <= 1 << 14 ? 2000 : 200;
  const double dx = 1.0 / static_cast<double>(n);

  struct Row {
    const char* name;
    std::function<void()> serial, omp;
  };
  const Row rows[] = {
      {"axpy",
       [&] { kg::kernels::axpy_serial(x, 0.5, y, out); },
       [&] { kg::kernels::axpy_omp(x, 0.5, y, out); }},
      {"rk4_combine",
       [&] { kg::kernels::rk4_combine_serial(x, k1, k2, k3, k4, 1e-3, out); },
       [&] { kg::kernels::rk4_combine_omp(x, k1, k2, k3, k4, 1e-3, out); }},
      {"laplacian_line",
       [&] { kg::kernels::laplacian_line_serial(x, dx, false, out); },
       [&] { kg::kernels::laplacian_line_omp(x, dx, false, out); }},
      {"laplacian_radial",
       [&] { kg::kernels::laplacian_radial_serial(x, dx, 3, out); },
       [&] { kg::kernels::laplacian_radial_omp(x, dx, 3, out); }},
  };

  for (const auto& row : rows) {
    const double ts = time_of(row.serial, reps);
    const double tp = time_of(row.omp, reps);
    std::printf("%-18s n=%-8zu serial %10.3f us   omp %10.3f us   speedup %5.2fx\n",
                row.name, n, ts * 1e6, tp * 1e6, ts / tp);
  }
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; the omp variants fall back to serial\n");
#endif
  for (std::size_t n : {1024u, 16384u, 262144u, 2097152u}) bench_size(n);
  return 0;
}
