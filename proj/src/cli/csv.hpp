#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "agpwave/beampattern.hpp"
#include "agpwave/scene.hpp"

namespace agpwave::cli {

// File-level failures (unreadable/unwritable paths, malformed rows); the
// CLI maps these to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All writers emit a header row and serialize numbers with 15 significant
// digits so reruns diff cleanly.
void write_waveform_csv(const std::string& path, std::span<const cd> t);
Waveform read_waveform_csv(const std::string& path);

struct TrajectoryRow {
  int refinement;
  double delta_rad;
  double sinr_db;
};
void write_trajectory_csv(const std::string& path, const std::vector<TrajectoryRow>& rows);

void write_beampattern_csv(const std::string& path,
                           const std::vector<BeampatternSample>& samples);

}  // namespace agpwave::cli
