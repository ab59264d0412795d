#include "agpwave/beampattern.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace agpwave {

double to_db(double linear) {
  if (!(linear > 0.0)) throw std::invalid_argument("nonpositive power");
  return 10.0 * std::log10(linear);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::vector<double> default_angle_grid() {
  std::vector<double> grid(361);
  for (int i = 0; i < 361; ++i) grid[i] = -90.0 + 0.5 * i;
  return grid;
}

std::vector<BeampatternSample> beampattern(std::span<const cd> t, int num_tx,
                                           int num_samples,
                                           std::span<const double> grid_deg) {
  if (num_tx < 1 || num_samples < 1) throw std::invalid_argument("sizes must be positive");
  if (t.size() != static_cast<std::size_t>(num_tx) * num_samples)
    throw std::invalid_argument("dimension error");
  if (grid_deg.empty()) throw std::invalid_argument("empty angle grid");

  // spatial covariance R = sum_n t_n t_n^H
  CMat r(num_tx, num_tx);
  for (int n = 0; n < num_samples; ++n)
    linalg::add_scaled_outer(r, std::span<const cd>(t.data() + n * num_tx, num_tx), 1.0);

  std::vector<double> power(grid_deg.size());
  const long long ng = static_cast<long long>(grid_deg.size());
  // the signal model radiates a_t^T t_n toward an angle, so the quadratic
  // form pairs R with the conjugated steering vector:
  // sum_n |a^T t_n|^2 = conj(a)^H R conj(a)
  auto power_at = [&](long long g) {
    const double angle = grid_deg[g] * std::numbers::pi / 180.0;
    auto a = steering_vector(angle, num_tx);
    for (cd& v : a) v = std::conj(v);
    std::vector<cd> ra(num_tx);
    linalg::serial::matvec(r, a, ra);
    const cd p = linalg::vdot(a, ra);
    if (std::abs(p.imag()) > 1e-12 * std::max(1.0, std::abs(p.real())))
      throw std::runtime_error("beampattern imaginary residue");
    return p.real();
  };
#pragma omp parallel for schedule(static)
  for (long long g = 0; g < ng; ++g) power[g] = power_at(g);

  double peak = 0.0;
  for (double p : power) peak = std::max(peak, p);
  if (!(peak > 0.0)) throw std::runtime_error("degenerate beampattern");

  std::vector<BeampatternSample> out(grid_deg.size());
  for (std::size_t g = 0; g < grid_deg.size(); ++g) {
    // floor at -300 dB so exact pattern nulls stay finite
    const double rel = std::max(power[g] / peak, 1e-30);
    out[g] = {grid_deg[g], to_db(rel)};
  }
  return out;
}

}  // namespace agpwave
