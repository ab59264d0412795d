#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "agpwave/beampattern.hpp"
#include "agpwave/chirp.hpp"
#include "agpwave/pipeline.hpp"
#include "cli/csv.hpp"
#include "cli/scenario.hpp"

namespace agpwave::cli {

namespace {

Scenario load_or_default(const std::optional<std::string>& path) {
  return path ? load_scenario(*path) : Scenario{};
}

}  // namespace

void cmd_generate_reference(int num_tx, int num_samples, const std::string& out_path) {
  const auto ref = chirp_reference(num_tx, num_samples);
  write_waveform_csv(out_path, ref.vector);
}

void cmd_optimize(const OptimizeOptions& opts) {
  Scenario sc = load_or_default(opts.scenario_path);
  if (opts.epsilon_override) sc.epsilon = *opts.epsilon_override;
  if (opts.seed_override) sc.seed = *opts.seed_override;
  if (!(sc.epsilon >= 0.0 && sc.epsilon <= 2.0))
    throw std::invalid_argument("epsilon must lie in [0, 2]");

  const Scene scene = to_scene(sc);
  const PipelineConfig cfg = to_pipeline_config(sc);
  const auto ref = chirp_reference(sc.num_tx, sc.num_samples);

  std::error_code ec;
  std::filesystem::create_directories(opts.out_dir, ec);
  if (ec) throw IoError("cannot create output directory: " + opts.out_dir);

  const auto t_start = std::chrono::steady_clock::now();
  const RunRecord rec = optimize_waveform(scene, ref.vector, cfg);
  const double wall_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

  const std::filesystem::path dir(opts.out_dir);
  write_waveform_csv((dir / "waveform_reference.csv").string(), ref.vector);
  write_waveform_csv((dir / "waveform_optimized.csv").string(), rec.final_waveform);

  std::vector<TrajectoryRow> rows;
  const double delta0 = rec.per_refinement_delta.empty()
                            ? 0.0
                            : rec.per_refinement_delta.front();
  rows.push_back({0, delta0, rec.sinr_trajectory_db[0]});
  for (std::size_t r = 0; r < rec.per_refinement_delta.size(); ++r)
    rows.push_back({static_cast<int>(r + 1), rec.per_refinement_delta[r],
                    rec.sinr_trajectory_db[r + 1]});
  write_trajectory_csv((dir / "sinr_trajectory.csv").string(), rows);

  const auto grid = default_angle_grid();
  write_beampattern_csv((dir / "beampattern_reference.csv").string(),
                        beampattern(ref.vector, sc.num_tx, sc.num_samples, grid));
  write_beampattern_csv((dir / "beampattern_optimized.csv").string(),
                        beampattern(rec.final_waveform, sc.num_tx, sc.num_samples, grid));

  nlohmann::ordered_json summary;
  summary["epsilon"] = sc.epsilon;
  summary["seed"] = sc.seed;
  summary["refinements"] = rec.refinements;
  summary["deltaInitialRad"] = delta0;
  summary["referenceSinrDb"] = rec.sinr_trajectory_db[0];
  summary["finalSinrDb"] = rec.final_sinr_db;
  summary["converged"] = rec.all_converged;
  summary["wallTimeSeconds"] = wall_s;
  std::ofstream sum((dir / "run_summary.json").string());
  if (!sum) throw IoError("cannot write run summary");
  sum << summary.dump(2) << '\n';

  std::printf("reference SINR %.6f dB, optimized SINR %.6f dB after %d refinements%s\n",
              rec.sinr_trajectory_db[0], rec.final_sinr_db, rec.refinements,
              rec.all_converged ? "" : " (not converged)");
}

bool cmd_validate(const ValidateOptions& opts) {
  Scenario sc = load_or_default(opts.scenario_path);
  if (opts.seed_override) sc.seed = *opts.seed_override;
  const Scene scene = to_scene(sc);

  const Waveform t = read_waveform_csv(opts.waveform_path);
  if (t.size() != static_cast<std::size_t>(scene.tx_dim()))
    throw std::invalid_argument("waveform length does not match scenario dimensions");

  const auto f = optimal_filter(t, scene);
  const double analytic = sinr(t, f, scene);
  const auto mc = simulate_receive(t, f, scene, sc.seed, opts.draws);
  const bool pass = std::abs(mc.empirical_sinr - analytic) <= 3.0 * mc.std_error;

  std::printf("analytic SINR   %.10g (%.6f dB)\n", analytic, to_db(analytic));
  std::printf("empirical SINR  %.10g (%d draws, seed %llu)\n", mc.empirical_sinr,
              opts.draws, static_cast<unsigned long long>(sc.seed));
  std::printf("standard error  %.10g\n", mc.std_error);
  std::printf("%s: |empirical - analytic| %s 3 standard errors\n",
              pass ? "PASS" : "FAIL", pass ? "within" : "beyond");
  return pass;
}

void cmd_beampattern(const std::string& waveform_path, int num_tx, int num_samples,
                     const std::string& out_path) {
  const Waveform t = read_waveform_csv(waveform_path);
  if (t.size() != static_cast<std::size_t>(num_tx) * num_samples)
    throw std::invalid_argument("waveform length does not match --num-tx * --num-samples");
  const auto grid = default_angle_grid();
  write_beampattern_csv(out_path, beampattern(t, num_tx, num_samples, grid));
}

}  // namespace agpwave::cli
