// Compares the tomogram/completeness kernels against their serial reference
// implementations. The reference grid recomputes the polynomial recurrence at
// every (theta, node) pair; the kernel shares one polynomial table across all
// rows and parallelizes over theta, so the two speedup factors are reported
// separately (table reuse at one thread, then threading on top).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qtomo/deformation.hpp"
#include "qtomo/measure.hpp"
#include "qtomo/tomogram.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int main() {
  const int threads = max_threads();
  std::printf("threads available: %d\n\n", threads);

  const qtomo::DeformationParams p(0.9);

  {
    const int n = 256;
    const int steps = 512;
    const auto m = qtomo::compute_measure(n, p);
    const auto st = qtomo::make_coherent({0.8, 0.3}, p, n, 1.0);
    std::vector<double> thetas(steps);
    for (int t = 0; t < steps; ++t) {
      thetas[t] = 2.0 * std::numbers::pi * t / (steps - 1);
    }

    qtomo::TomogramGrid ref, one, par;
    const double t_ref =
        best_of(3, [&] { ref = qtomo::reference::coherent_grid(st, thetas, m); });
    set_threads(1);
    const double t_one = best_of(3, [&] { one = qtomo::coherent_grid(st, thetas, m); });
    set_threads(threads);
    const double t_par = best_of(3, [&] { par = qtomo::coherent_grid(st, thetas, m); });

    double diff = 0.0;
    for (size_t i = 0; i < par.probabilities.size(); ++i) {
      diff = std::max(diff, std::abs(par.probabilities[i] - ref.probabilities[i]));
    }
    std::printf("coherent_grid, N=256, 512 thetas\n");
    std::printf("  reference (per-point recurrence) %10.2f ms\n", t_ref);
    std::printf("  kernel, 1 thread                 %10.2f ms  (%.1fx vs reference)\n",
                t_one, t_ref / t_one);
    std::printf("  kernel, %d threads                %10.2f ms  (%.2fx vs 1 thread)\n",
                threads, t_par, t_one / t_par);
    std::printf("  max |kernel - reference|         %10.2e\n\n", diff);
  }

  {
    const int n = 384;
    const auto m = qtomo::compute_measure(n, p);
    double r_par = 0.0, r_ser = 0.0;
    const double t_ser =
        best_of(3, [&] { r_ser = qtomo::reference::completeness_residual(m, 1.1); });
    const double t_par = best_of(3, [&] { r_par = qtomo::completeness_residual(m, 1.1); });
    std::printf("completeness_residual, N=384\n");
    std::printf("  serial reference                 %10.2f ms\n", t_ser);
    std::printf("  kernel, %d threads                %10.2f ms  (%.2fx)\n", threads, t_par,
                t_ser / t_par);
    std::printf("  |kernel - reference|             %10.2e\n", std::abs(r_par - r_ser));
  }

  return 0;
}
