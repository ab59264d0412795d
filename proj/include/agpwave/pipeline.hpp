#pragma once

#include <span>
#include <vector>

#include "agpwave/scene.hpp"
#include "agpwave/solver.hpp"

namespace agpwave {

struct PipelineConfig {
  double epsilon = 0.5;     // similarity parameter, [0, 2]
  double delta_min = 0.0;   // refinement stop; <= 0 selects max(1e-3, delta0/1024)
  SolverConfig solver;
  bool update_psi_each_refinement = true;
};

struct RunRecord {
  // Entry 0 is the reference waveform's SINR; entry r the SINR after the
  // r-th refinement solve.
  std::vector<double> sinr_trajectory_db;
  // delta used by each refinement solve (halves exactly between entries).
  std::vector<double> per_refinement_delta;
  // Per-refinement relaxed objective traces from the inner solver.
  std::vector<std::vector<double>> relaxed_objective_traces;
  Waveform final_waveform;   // best recorded SINR, not necessarily the last
  std::vector<cd> final_filter;
  double final_sinr_db = 0.0;
  int refinements = 0;
  bool all_converged = true;
};

// Halve the arc width, keeping for each entry the half that contains the
// solved phase (midpoint ties go to the lower half). Throws if a phase lies
// outside the region by more than 1e-6 rad.
ArcRegion halve_region(const ArcRegion& region, std::span<const cd> solved);

// Fixed-objective refinement: repeatedly solve the relaxed subproblem and
// halve the region around the solution until delta <= delta_min. Returns the
// final constant-modulus waveform. This is the inner engine of
// optimize_waveform without the per-refinement Psi rebuild.
Waveform refine_waveform(const CMat& psi, const ArcRegion& region,
                         std::span<const cd> start, const SolverConfig& config,
                         double delta_min);

// Outer loop: rebuild Psi at the current waveform, solve the relaxed
// subproblem, record SINR through the optimal filter, halve the region;
// stops once delta <= delta_min. epsilon = 0 returns the reference
// evaluation only.
RunRecord optimize_waveform(const Scene& scene, std::span<const cd> t0,
                            const PipelineConfig& config);

}  // namespace agpwave
