#include "agpwave/solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "agpwave/scene.hpp"

namespace agpwave {

namespace {

double clamp_nonneg(double v) { return v < 0.0 ? 0.0 : v; }

double real_quadratic(const CMat& p, std::span<const cd> t, std::vector<cd>& scratch) {
  linalg::matvec(p, t, scratch);
  return linalg::vdot(t, scratch).real();
}

// Entrywise feasibility of a projected iterate: modulus and chord half-plane,
// in unit-radius coordinates. Cheap relative to the matvec, kept on in all
// builds; a violation means the projector is broken.
void check_feasible(std::span<const cd> t, const ArcRegion& region,
                    std::span<const double> chord_x, std::span<const double> chord_y) {
  const double scale = std::sqrt(static_cast<double>(t.size()));
  const bool wide = region.delta >= std::numbers::pi;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double x = scale * t[k].real();
    const double y = scale * t[k].imag();
    if (x * x + y * y > 1.0 + 1e-9)
      throw std::runtime_error("projected iterate left the feasible region");
    const double lhs = chord_x[k] * x + chord_y[k] * y;
    const double rhs = chord_x[k] * chord_x[k] + chord_y[k] * chord_y[k];
    const bool ok = wide ? lhs <= rhs + 1e-9 : lhs >= rhs - 1e-9;
    if (!ok) throw std::runtime_error("projected iterate left the feasible region");
  }
}

Waveform normalize_to_arcs(std::span<const cd> t, const ArcRegion& region) {
  const double amp = constant_modulus_amplitude(static_cast<int>(t.size()));
  Waveform out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double lo = region.omega[k];
    double phase;
    if (t[k] == cd{0.0, 0.0}) {
      phase = lo + 0.5 * region.delta;  // hull contains 0 only when delta >= pi
    } else {
      phase = std::arg(t[k]);
      if (!phase_in_arc(phase, lo, region.delta, 0.0)) {
        // possible only for delta >= pi: chord points can sit in the
        // complementary arc; snap to the nearer endpoint
        const double to_lo = std::abs(wrap_to_pi(phase - lo));
        const double to_hi = std::abs(wrap_to_pi(phase - (lo + region.delta)));
        phase = to_lo <= to_hi ? lo : lo + region.delta;
      }
    }
    out[k] = std::polar(amp, phase);
  }
  return out;
}

}  // namespace

double max_eigenvalue(const CMat& a, double tol) {
  if (a.rows != a.cols) throw std::invalid_argument("dimension error");
  const std::size_t n = a.rows;
  if (n == 0) throw std::invalid_argument("dimension error");

  std::vector<cd> v(n, cd{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
  std::vector<cd> w(n);
  constexpr int kMaxIters = 10000;
  for (int it = 0; it < kMaxIters; ++it) {
    linalg::matvec(a, v, w);
    const double lambda = linalg::vdot(v, w).real();
    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) resid += std::norm(w[i] - lambda * v[i]);
    resid = std::sqrt(resid);
    if (resid <= tol * std::max(std::abs(lambda), 1e-300)) return lambda;
    const double wn = linalg::norm2(w);
    if (wn == 0.0) return 0.0;  // zero matrix
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
  }
  throw std::runtime_error("eigenvalue iteration stalled");
}

SubproblemMatrices build_subproblem(const CMat& psi, const SolverConfig& config) {
  double lmax;
  try {
    lmax = max_eigenvalue(psi, config.power_iter_tol);
  } catch (const std::runtime_error&) {
    // trace bounds the top eigenvalue of a PSD matrix from above
    lmax = 0.0;
    for (std::size_t i = 0; i < psi.rows; ++i) lmax += psi(i, i).real();
  }
  SubproblemMatrices sub;
  sub.psi = psi;
  sub.lambda = (1.0 + config.lambda_margin) * clamp_nonneg(lmax);
  sub.p = psi;
  for (std::size_t i = 0; i < sub.p.rows; ++i) sub.p(i, i) -= sub.lambda;
  sub.tau = sub.lambda > 0.0 ? 1.0 / (2.0 * sub.lambda) : 0.0;
  return sub;
}

std::vector<cd> fista_step(std::span<const cd> t_cur, std::span<const cd> t_prev,
                           int iter_index, const SubproblemMatrices& sub) {
  if (t_cur.size() != t_prev.size() || t_cur.size() != sub.p.rows)
    throw std::invalid_argument("dimension error");
  if (iter_index < 1) throw std::invalid_argument("iteration index must be >= 1");

  const double c = (iter_index - 1.0) / (iter_index + 2.0);
  std::vector<cd> v(t_cur.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = t_cur[i] + c * (t_cur[i] - t_prev[i]);

  std::vector<cd> pv(v.size());
  linalg::matvec(sub.p, v, pv);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += 2.0 * sub.tau * pv[i];
  return v;
}

SubproblemResult agp_solve(const SubproblemMatrices& sub, const ArcRegion& region,
                           std::span<const cd> start, const SolverConfig& config) {
  const std::size_t n = sub.p.rows;
  if (region.omega.size() != n || start.size() != n)
    throw std::invalid_argument("dimension error");
  if (!(config.zeta > 0.0)) throw std::invalid_argument("zeta must be positive");
  if (config.max_iterations < 2)
    throw std::invalid_argument("maxIterations must be >= 2");

  SubproblemResult res;
  std::vector<cd> scratch(n);

  if (region.delta <= 0.0) {
    // the region is a single point per entry
    const double amp = constant_modulus_amplitude(static_cast<int>(n));
    res.waveform.resize(n);
    for (std::size_t k = 0; k < n; ++k) res.waveform[k] = std::polar(amp, region.omega[k]);
    res.relaxed = res.waveform;
    res.converged = true;
    if (config.record_objective)
      res.objective_trace.push_back(real_quadratic(sub.p, res.waveform, scratch));
    return res;
  }

  std::vector<double> chord_x(n), chord_y(n);
  for (std::size_t k = 0; k < n; ++k) {
    chord_x[k] = 0.5 * (std::cos(region.omega[k]) + std::cos(region.omega[k] + region.delta));
    chord_y[k] = 0.5 * (std::sin(region.omega[k]) + std::sin(region.omega[k] + region.delta));
  }

  const RegionProjector projector(region);
  std::vector<cd> t_cur(n);
  projector.project(start, t_cur);
  std::vector<cd> t_prev = t_cur;
  std::vector<cd> stepped(n), t_next(n);

  // With recording on, track the best iterate by objective so a
  // non-converged run still returns its best point; with it off the extra
  // matvec per iteration is skipped and the final iterate is returned.
  double best_obj = 0.0;
  std::vector<cd> best;
  if (config.record_objective) {
    best_obj = real_quadratic(sub.p, t_cur, scratch);
    best = t_cur;
    res.objective_trace.push_back(best_obj);
  }

  bool converged = false;
  int iter = 0;
  while (iter < config.max_iterations) {
    ++iter;
    // v = t_cur + c (t_cur - t_prev), then v + 2 tau P v, then project
    const double c = (iter - 1.0) / (iter + 2.0);
    for (std::size_t i = 0; i < n; ++i)
      stepped[i] = t_cur[i] + c * (t_cur[i] - t_prev[i]);
    linalg::matvec(sub.p, stepped, scratch);
    for (std::size_t i = 0; i < n; ++i) stepped[i] += 2.0 * sub.tau * scratch[i];
    projector.project(stepped, t_next);
    check_feasible(t_next, region, chord_x, chord_y);

    if (config.record_objective) {
      const double obj = real_quadratic(sub.p, t_next, scratch);
      res.objective_trace.push_back(obj);
      if (obj > best_obj) {
        best_obj = obj;
        best = t_next;
      }
    }

    const double step = linalg::norm2_diff(t_next, t_cur);
    t_prev.swap(t_cur);
    t_cur.swap(t_next);
    if (step <= config.zeta) {
      converged = true;
      break;
    }
  }

  res.iterations = iter;
  res.converged = converged;
  res.relaxed = (!converged && config.record_objective) ? best : t_cur;
  res.waveform = normalize_to_arcs(res.relaxed, region);
  return res;
}

SubproblemResult agp_solve(const CMat& psi, const ArcRegion& region,
                           std::span<const cd> start, const SolverConfig& config) {
  return agp_solve(build_subproblem(psi, config), region, start, config);
}

}  // namespace agpwave
