#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agpwave/pipeline.hpp"
#include "agpwave/scene.hpp"

namespace agpwave::cli {

// External scenario description: angles in degrees, powers in dB. Defaults
// reproduce the stock experiment (N = 16, Nt = 4, Nr = 8, 10 dB target at
// 15 deg, three 30 dB clutter patches at -50/-10/40 deg, eps = 0.5).
struct Scenario {
  int num_tx = 4;
  int num_rx = 8;
  int num_samples = 16;
  double target_angle_deg = 15.0;
  double target_power_db = 10.0;
  struct Clutter {
    double angle_deg;
    double power_db;
  };
  std::vector<Clutter> clutter = {{-50.0, 30.0}, {-10.0, 30.0}, {40.0, 30.0}};
  double epsilon = 0.5;
  double zeta = 1e-6;
  int max_iterations = 5000;
  std::optional<double> delta_min_rad;
  std::uint64_t seed = 1;
};

// Strict JSON load: unknown keys are rejected, all values type-checked.
// Throws std::invalid_argument naming the offending field.
Scenario load_scenario(const std::string& path);

Scene to_scene(const Scenario& s);
PipelineConfig to_pipeline_config(const Scenario& s);

}  // namespace agpwave::cli
