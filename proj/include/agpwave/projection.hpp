#pragma once

#include <span>
#include <vector>

#include "agpwave/linalg.hpp"

namespace agpwave {

// Per-entry feasible phase arc [omega_k, omega_k + delta] on the unit circle;
// delta is shared across entries. Projection targets the convex hull of the
// arc (the arc plus its chord segment's enclosed region).
struct ArcRegion {
  std::vector<double> omega;
  double delta = 0.0;
};

// omega_k = arg t0(k) - arccos(1 - eps^2/2), delta = 2 arccos(1 - eps^2/2);
// each arc is centered on the reference phase. eps in [0, 2].
ArcRegion region_from_similarity(std::span<const cd> t0, double epsilon);

// Chord/endpoint geometry of one arc in unit-radius coordinates.
// A is the endpoint at angle omega + delta, B the one at omega.
struct ArcGeometry {
  double ax = 0, ay = 0;
  double bx = 0, by = 0;
  double cx = 0, cy = 0;     // chord midpoint
  bool vertical = false;     // a_x + b_x == 0: perpendiculars through A, B are vertical
  double slope = 0;          // k_l = (a_y + b_y)/(a_x + b_x), valid when !vertical
  double d_a = 0, d_b = 0;   // intercepts of the perpendiculars through A and B
};
ArcGeometry arc_geometry(double omega, double delta);

// Nearest point of the arc hull to q (unit-radius coordinates). Total in q;
// delta in [0, 2pi]. delta = 0 degenerates to the point exp(i omega); delta
// within 1e-9 of 2pi degenerates to the full disk (radial clamp).
cd project_entry(cd q, double omega, double delta);

// Entrywise projection at physical scale: each entry is scaled by
// sqrt(Nt*N), projected, and scaled back.
std::vector<cd> project_waveform(std::span<const cd> t, const ArcRegion& region);

// Per-entry rotation/chord factors precomputed once so repeated projections
// onto the same region (the solver's inner loop) cost only arithmetic.
class RegionProjector {
 public:
  explicit RegionProjector(const ArcRegion& region);
  void project(std::span<const cd> in, std::span<cd> out) const;  // physical scale
  std::size_t size() const { return rot_.size(); }

 private:
  enum class Mode { kPoint, kFullDisk, kArc };
  Mode mode_ = Mode::kArc;
  double chord_x_ = 0.0;
  double half_sin_ = 0.0;
  double scale_ = 1.0;
  std::vector<cd> rot_;    // e^{-i(omega_k + delta/2)}
  std::vector<cd> point_;  // physical-scale region point when delta == 0
};

// Map an angle into (-pi, pi].
double wrap_to_pi(double angle);

// True when phase lies in [omega, omega + delta] up to tol (radians),
// measured from the arc midpoint so any delta <= 2pi works.
bool phase_in_arc(double phase, double omega, double delta, double tol);

}  // namespace agpwave
