#pragma once

#include <span>
#include <vector>

#include "agpwave/linalg.hpp"
#include "agpwave/projection.hpp"
#include "agpwave/scene.hpp"

namespace agpwave {

struct SolverConfig {
  double zeta = 1e-6;          // stopping threshold on ||t_n* - t_{n-1}*||_2
  int max_iterations = 5000;
  double lambda_margin = 1e-6;   // relative margin over lambda_max(Psi)
  double power_iter_tol = 1e-9;
  bool record_objective = true;  // keep the per-iteration t^H P t trace
};

// One convex subproblem: P = Psi - lambda I is negative semidefinite, the
// gradient of t^H P t is 2-Lipschitz with constant 2 lambda, tau = 1/(2 lambda).
struct SubproblemMatrices {
  CMat psi;
  double lambda = 0.0;
  CMat p;
  double tau = 0.0;
};

struct SubproblemResult {
  Waveform waveform;          // constant-modulus output, phases inside the arcs
  Waveform relaxed;           // final iterate before modulus normalization
  int iterations = 0;
  std::vector<double> objective_trace;  // t^H P t, entry 0 = projected start
  bool converged = false;
};

// Dominant eigenvalue by power iteration from the normalized all-ones vector
// (deterministic). Residual criterion ||A v - l v|| <= tol * max(l, tiny).
// Throws std::runtime_error("eigenvalue iteration stalled") after 1e4 steps.
double max_eigenvalue(const CMat& a, double tol);

// lambda = (1 + margin) * lambda_max(Psi); falls back to the trace upper
// bound if the power iteration stalls.
SubproblemMatrices build_subproblem(const CMat& psi, const SolverConfig& config);

// Interpolated ascent step: v = t_cur + c (t_cur - t_prev) with
// c = (iter_index - 1)/(iter_index + 2), then v + 2 tau P v.
std::vector<cd> fista_step(std::span<const cd> t_cur, std::span<const cd> t_prev,
                           int iter_index, const SubproblemMatrices& sub);

// Accelerated gradient projection for one subproblem: interpolated gradient
// steps alternated with the entrywise arc-hull projection, stopping when the
// projected iterates move less than zeta or max_iterations is reached.
SubproblemResult agp_solve(const SubproblemMatrices& sub, const ArcRegion& region,
                           std::span<const cd> start, const SolverConfig& config);
SubproblemResult agp_solve(const CMat& psi, const ArcRegion& region,
                           std::span<const cd> start, const SolverConfig& config);

}  // namespace agpwave
