#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace agpwave::cli {

// Subcommand bodies. They throw on failure (std::invalid_argument for
// config/usage problems, IoError for file problems, std::runtime_error for
// numerical ones); the binary's main maps those to exit codes 1/2/3.

void cmd_generate_reference(int num_tx, int num_samples, const std::string& out_path);

struct OptimizeOptions {
  std::optional<std::string> scenario_path;  // absent: stock defaults
  std::string out_dir;
  std::optional<double> epsilon_override;
  std::optional<std::uint64_t> seed_override;
};
void cmd_optimize(const OptimizeOptions& opts);

struct ValidateOptions {
  std::optional<std::string> scenario_path;
  std::string waveform_path;
  int draws = 100000;
  std::optional<std::uint64_t> seed_override;
};
// Returns true when the Monte Carlo estimate agrees with the analytic SINR
// within three standard errors.
bool cmd_validate(const ValidateOptions& opts);

void cmd_beampattern(const std::string& waveform_path, int num_tx, int num_samples,
                     const std::string& out_path);

}  // namespace agpwave::cli
