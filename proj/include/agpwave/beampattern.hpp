#pragma once

#include <span>
#include <vector>

#include "agpwave/scene.hpp"

namespace agpwave {

struct BeampatternSample {
  double angle_deg = 0.0;
  double power_db = 0.0;  // normalized so the grid peak is 0 dB
};

// Transmit beampattern a_t^H(angle) R a_t(angle) with R = sum_n t_n t_n^H,
// evaluated over grid_deg and normalized to the grid maximum.
std::vector<BeampatternSample> beampattern(std::span<const cd> t, int num_tx,
                                           int num_samples,
                                           std::span<const double> grid_deg);

// 361 points, -90 to 90 degrees, 0.5 degree step.
std::vector<double> default_angle_grid();

double to_db(double linear);  // 10 log10; throws on nonpositive input
double db_to_linear(double db);

}  // namespace agpwave
