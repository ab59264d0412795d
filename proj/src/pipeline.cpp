#include "agpwave/pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "agpwave/beampattern.hpp"
#include "agpwave/projection.hpp"

namespace agpwave {

ArcRegion halve_region(const ArcRegion& region, std::span<const cd> solved) {
  if (solved.size() != region.omega.size()) throw std::invalid_argument("dimension error");
  ArcRegion out;
  out.delta = 0.5 * region.delta;
  out.omega.resize(region.omega.size());
  for (std::size_t k = 0; k < solved.size(); ++k) {
    const double phase = std::arg(solved[k]);
    // offset from the arc midpoint, wrap-safe; <= 0 keeps the lower half
    const double off = wrap_to_pi(phase - (region.omega[k] + 0.5 * region.delta));
    if (std::abs(off) > 0.5 * region.delta + 1e-6)
      throw std::invalid_argument("infeasible refinement input");
    out.omega[k] = off <= 0.0 ? region.omega[k] : region.omega[k] + 0.5 * region.delta;
  }
  return out;
}

Waveform refine_waveform(const CMat& psi, const ArcRegion& region,
                         std::span<const cd> start, const SolverConfig& config,
                         double delta_min) {
  if (!(delta_min > 0.0)) throw std::invalid_argument("deltaMin must be positive");
  const SubproblemMatrices sub = build_subproblem(psi, config);
  ArcRegion r = region;
  Waveform t(start.begin(), start.end());
  while (r.delta > delta_min) {
    t = agp_solve(sub, r, t, config).waveform;
    r = halve_region(r, t);
  }
  return t;
}

RunRecord optimize_waveform(const Scene& scene, std::span<const cd> t0,
                            const PipelineConfig& config) {
  scene.validate();
  if (t0.size() != static_cast<std::size_t>(scene.tx_dim()))
    throw std::invalid_argument("dimension error");
  if (max_modulus_deviation(t0) > 1e-6)
    throw std::invalid_argument("reference waveform is not constant modulus");

  ArcRegion region = region_from_similarity(t0, config.epsilon);
  const double delta0 = region.delta;

  double delta_min = config.delta_min;
  if (delta_min > 0.0) {
    if (config.epsilon > 0.0 && delta_min >= delta0)
      throw std::invalid_argument("deltaMin must be below the initial delta");
  } else {
    delta_min = std::max(1e-3, delta0 / 1024.0);
  }

  RunRecord rec;
  Waveform t_cur(t0.begin(), t0.end());

  auto evaluate = [&](const Waveform& t) {
    const auto f = optimal_filter(t, scene);
    return sinr(t, f, scene);
  };

  double best_sinr = evaluate(t_cur);
  Waveform best_waveform = t_cur;
  rec.sinr_trajectory_db.push_back(to_db(best_sinr));

  CMat psi;
  bool have_psi = false;
  while (region.delta > delta_min) {
    if (config.update_psi_each_refinement || !have_psi) {
      psi = psi_matrix(t_cur, scene);
      have_psi = true;
    }
    SubproblemResult sol = agp_solve(psi, region, t_cur, config.solver);
    rec.all_converged = rec.all_converged && sol.converged;
    rec.relaxed_objective_traces.push_back(std::move(sol.objective_trace));
    rec.per_refinement_delta.push_back(region.delta);

    t_cur = std::move(sol.waveform);
    const double s = evaluate(t_cur);
    rec.sinr_trajectory_db.push_back(to_db(s));
    if (s > best_sinr) {
      best_sinr = s;
      best_waveform = t_cur;
    }
    region = halve_region(region, t_cur);
  }

  rec.refinements = static_cast<int>(rec.per_refinement_delta.size());
  rec.final_waveform = std::move(best_waveform);
  rec.final_filter = optimal_filter(rec.final_waveform, scene);
  rec.final_sinr_db = to_db(sinr(rec.final_waveform, rec.final_filter, scene));
  return rec;
}

}  // namespace agpwave
