// Throughput comparison of the OpenMP kernels against the serial reference
// implementations, plus the per-size cost of one AGP subproblem solve.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "agpwave/chirp.hpp"
#include "agpwave/rng.hpp"
#include "agpwave/scene.hpp"
#include "agpwave/solver.hpp"

using namespace agpwave;

namespace {

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

CMat random_hermitian(std::size_t n, std::uint64_t seed) {
  CMat g(n, n);
  for (std::size_t i = 0; i < n * n; ++i) g.data[i] = complex_normal(seed, i);
  CMat a = linalg::serial::matmul_adjoint_left(g, g);
  linalg::hermitize(a);
  return a;
}

template <typename F>
double best_ms(F&& body, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    best = std::min(best, elapsed_ms(t0));
  }
  return best;
}

void bench_matvec() {
  std::printf("matvec y = A x, best of 5, %d inner iterations each\n", 200);
  std::printf("%8s %12s %12s %9s\n", "n", "serial ms", "openmp ms", "speedup");
  for (std::size_t n : {64, 128, 256, 512, 1024}) {
    const CMat a = random_hermitian(n, 7);
    std::vector<cd> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = complex_normal(11, i);

    const double ts = best_ms(
        [&] {
          for (int i = 0; i < 200; ++i) linalg::serial::matvec(a, x, y);
        },
        5);
    const double tp = best_ms(
        [&] {
          for (int i = 0; i < 200; ++i) linalg::matvec(a, x, y);
        },
        5);
    std::printf("%8zu %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
  }
}

void bench_agp_subproblem() {
  std::printf("\none AGP subproblem, 200 fixed iterations, chirp start, best of 3\n");
  std::printf("%8s %8s %12s\n", "Nt", "Nt*N", "ms/solve");
  for (int num_tx : {2, 4, 8, 16}) {
    Scene scene;
    scene.num_tx = num_tx;
    scene.num_rx = 8;
    scene.num_samples = 16;
    const double deg = std::numbers::pi / 180.0;
    scene.target_angle_rad = 15.0 * deg;
    scene.target_power_ratio = 10.0;
    scene.clutter = {{-50.0 * deg, 1000.0}, {-10.0 * deg, 1000.0}, {40.0 * deg, 1000.0}};

    const auto ref = chirp_reference(num_tx, scene.num_samples);
    const CMat psi = psi_matrix(ref.vector, scene);
    const ArcRegion region = region_from_similarity(ref.vector, 0.5);

    SolverConfig cfg;
    cfg.zeta = 1e-300;
    cfg.max_iterations = 200;
    cfg.record_objective = false;
    const SubproblemMatrices sub = build_subproblem(psi, cfg);

    const double ms = best_ms([&] { (void)agp_solve(sub, region, ref.vector, cfg); }, 3);
    std::printf("%8d %8d %12.3f\n", num_tx, scene.tx_dim(), ms);
  }
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, %d thread(s)\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available, all kernels serial\n\n");
#endif
  bench_matvec();
  bench_agp_subproblem();
  return 0;
}
