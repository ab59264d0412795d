#include "agpwave/projection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace agpwave {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFullDiskSlack = 1e-9;  // delta this close to 2pi means the whole disk

// Projection of q onto the arc hull rotated so the chord is the vertical
// line x = chord_x with endpoints (chord_x, +-s). rot = e^{-i mid}.
inline cd project_rotated(cd q, cd rot, double chord_x, double s) {
  const cd w = q * rot;
  const double x = w.real();
  const double y = w.imag();

  cd r;
  if (x >= chord_x && std::norm(w) <= 1.0) {
    return q;  // already feasible
  } else if (x <= chord_x && std::abs(y) <= s) {
    r = cd{chord_x, y};  // foot of the perpendicular on the chord
  } else if (y >= s && s * x - chord_x * y <= 0.0) {
    r = cd{chord_x, s};  // endpoint at omega + delta
  } else if (y <= -s && s * x + chord_x * y <= 0.0) {
    r = cd{chord_x, -s};  // endpoint at omega
  } else {
    r = w / std::abs(w);  // radial, angle already covered by the arc
  }
  return r * std::conj(rot);
}

inline cd radial_clamp(cd q) {
  const double m = std::abs(q);
  return m <= 1.0 ? q : q / m;
}

}  // namespace

double wrap_to_pi(double angle) {
  double a = std::remainder(angle, kTwoPi);
  if (a <= -std::numbers::pi) a += kTwoPi;
  return a;
}

bool phase_in_arc(double phase, double omega, double delta, double tol) {
  // measure from the arc midpoint so the test is valid for any delta <= 2pi
  const double off = wrap_to_pi(phase - (omega + 0.5 * delta));
  return std::abs(off) <= 0.5 * delta + tol;
}

ArcRegion region_from_similarity(std::span<const cd> t0, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 2.0))
    throw std::invalid_argument("similarity parameter out of range");
  const double half = std::acos(1.0 - epsilon * epsilon / 2.0);
  ArcRegion region;
  region.delta = 2.0 * half;
  region.omega.resize(t0.size());
  for (std::size_t k = 0; k < t0.size(); ++k) region.omega[k] = std::arg(t0[k]) - half;
  return region;
}

ArcGeometry arc_geometry(double omega, double delta) {
  if (!(delta > 0.0 && delta < kTwoPi)) throw std::invalid_argument("delta out of range");
  ArcGeometry g;
  g.ax = std::cos(omega + delta);
  g.ay = std::sin(omega + delta);
  g.bx = std::cos(omega);
  g.by = std::sin(omega);
  g.cx = 0.5 * (g.ax + g.bx);
  g.cy = 0.5 * (g.ay + g.by);
  g.vertical = std::abs(g.ax + g.bx) < 1e-12;
  if (!g.vertical) {
    g.slope = (g.ay + g.by) / (g.ax + g.bx);
    g.d_a = g.ay - g.ax * g.slope;
    g.d_b = g.by - g.bx * g.slope;
  }
  return g;
}

cd project_entry(cd q, double omega, double delta) {
  if (!(delta >= 0.0 && delta <= kTwoPi + 1e-12))
    throw std::invalid_argument("delta out of range");

  if (delta <= 0.0) return std::polar(1.0, omega);
  if (delta >= kTwoPi - kFullDiskSlack) return radial_clamp(q);

  // Rotate by the arc midpoint angle: the chord becomes the vertical line
  // x = cos(delta/2), endpoints (cos h, +-sin h) with h = delta/2, and the
  // delta <=> pi inequality flip happens by itself through the sign of cos h.
  const double h = 0.5 * delta;
  return project_rotated(q, std::polar(1.0, -(omega + h)), std::cos(h), std::sin(h));
}

RegionProjector::RegionProjector(const ArcRegion& region) {
  const std::size_t n = region.omega.size();
  scale_ = std::sqrt(static_cast<double>(n));
  rot_.resize(n);
  if (!(region.delta >= 0.0 && region.delta <= kTwoPi + 1e-12))
    throw std::invalid_argument("delta out of range");

  if (region.delta <= 0.0) {
    mode_ = Mode::kPoint;
    point_.resize(n);
    for (std::size_t k = 0; k < n; ++k)
      point_[k] = std::polar(1.0 / scale_, region.omega[k]);
    return;
  }
  if (region.delta >= kTwoPi - kFullDiskSlack) {
    mode_ = Mode::kFullDisk;
    return;
  }
  mode_ = Mode::kArc;
  const double h = 0.5 * region.delta;
  chord_x_ = std::cos(h);
  half_sin_ = std::sin(h);
  for (std::size_t k = 0; k < n; ++k)
    rot_[k] = std::polar(1.0, -(region.omega[k] + h));
}

void RegionProjector::project(std::span<const cd> in, std::span<cd> out) const {
  const std::size_t n = rot_.size();
  if (in.size() != n || out.size() != n) throw std::invalid_argument("dimension error");
  const double inv_scale = 1.0 / scale_;

  switch (mode_) {
    case Mode::kPoint:
      for (std::size_t k = 0; k < n; ++k) out[k] = point_[k];
      return;
    case Mode::kFullDisk:
      for (std::size_t k = 0; k < n; ++k)
        out[k] = inv_scale * radial_clamp(scale_ * in[k]);
      return;
    case Mode::kArc:
      break;
  }

  bool par = false;
#ifdef _OPENMP
  par = n >= 2048 && omp_get_max_threads() > 1 && !omp_in_parallel();
#endif
  if (!par) {
    for (std::size_t k = 0; k < n; ++k)
      out[k] = inv_scale * project_rotated(scale_ * in[k], rot_[k], chord_x_, half_sin_);
    return;
  }
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < nn; ++k)
    out[k] = inv_scale *
             project_rotated(scale_ * in[k], rot_[k], chord_x_, half_sin_);
}

std::vector<cd> project_waveform(std::span<const cd> t, const ArcRegion& region) {
  if (t.size() != region.omega.size()) throw std::invalid_argument("dimension error");
  const RegionProjector proj(region);
  std::vector<cd> out(t.size());
  proj.project(t, out);
  return out;
}

}  // namespace agpwave
