#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/csv.hpp"

namespace {

// Exit codes: 0 success, 1 usage/config error, 2 I/O error, 3 numerical failure.
int run(int argc, char** argv) {
  CLI::App app{"Constant-modulus MIMO radar waveform design via accelerated gradient projection"};
  app.require_subcommand(1);

  int num_tx = 4;
  int num_samples = 16;
  std::string out_path;
  std::string out_dir;
  std::string scenario_path;
  std::string waveform_path;
  double epsilon = -1.0;
  std::int64_t seed = 0;
  int draws = 100000;

  auto* gen = app.add_subcommand("generate-reference", "Write the orthogonal chirp reference waveform CSV");
  gen->add_option("--num-tx", num_tx, "Transmit antennas")->capture_default_str();
  gen->add_option("--num-samples", num_samples, "Samples per pulse")->capture_default_str();
  gen->add_option("--out", out_path, "Output CSV path")->required();

  auto* opt = app.add_subcommand("optimize", "Run the full waveform optimization and write the output bundle");
  opt->add_option("--scenario", scenario_path, "Scenario JSON (defaults to the stock scenario)");
  opt->add_option("--out", out_dir, "Output directory")->required();
  opt->add_option("--epsilon", epsilon, "Override the scenario's similarity parameter");
  opt->add_option("--seed", seed, "Override the scenario's seed")
      ->check(CLI::NonNegativeNumber);

  auto* val = app.add_subcommand("validate", "Monte Carlo check of a waveform's analytic SINR");
  val->add_option("--scenario", scenario_path, "Scenario JSON (defaults to the stock scenario)");
  val->add_option("--waveform", waveform_path, "Waveform CSV to validate")->required();
  val->add_option("--draws", draws, "Monte Carlo draws (>= 100)")->capture_default_str();
  val->add_option("--seed", seed, "Override the scenario's seed")
      ->check(CLI::NonNegativeNumber);

  auto* bp = app.add_subcommand("beampattern", "Write the transmit beampattern CSV for a waveform");
  bp->add_option("--waveform", waveform_path, "Waveform CSV")->required();
  bp->add_option("--num-tx", num_tx, "Transmit antennas")->capture_default_str();
  bp->add_option("--num-samples", num_samples, "Samples per pulse")->capture_default_str();
  bp->add_option("--out", out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  using namespace agpwave::cli;
  if (gen->parsed()) {
    cmd_generate_reference(num_tx, num_samples, out_path);
  } else if (opt->parsed()) {
    OptimizeOptions o;
    if (!scenario_path.empty()) o.scenario_path = scenario_path;
    o.out_dir = out_dir;
    if (opt->count("--epsilon") > 0) o.epsilon_override = epsilon;
    if (opt->count("--seed") > 0) o.seed_override = static_cast<std::uint64_t>(seed);
    cmd_optimize(o);
  } else if (val->parsed()) {
    ValidateOptions o;
    if (!scenario_path.empty()) o.scenario_path = scenario_path;
    o.waveform_path = waveform_path;
    o.draws = draws;
    if (val->count("--seed") > 0) o.seed_override = static_cast<std::uint64_t>(seed);
    if (!cmd_validate(o)) return 3;
  } else if (bp->parsed()) {
    cmd_beampattern(waveform_path, num_tx, num_samples, out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const agpwave::cli::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
