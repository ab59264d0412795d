#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "agpwave/chirp.hpp"
#include "agpwave/linalg.hpp"
#include "cli/commands.hpp"
#include "cli/csv.hpp"
#include "cli/scenario.hpp"

using namespace agpwave;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  const fs::path p = fs::temp_directory_path() / "agpwave_cli_test";
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(AGPWAVE_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

// small, fast scenario
const char* kTinyScenario = R"({
  "numTx": 2, "numRx": 2, "numSamples": 4,
  "targetAngleDeg": 10.0, "targetPowerDb": 10.0,
  "clutter": [{"angleDeg": -30.0, "powerDb": 20.0}],
  "epsilon": 0.5,
  "solver": {"zeta": 1e-6, "maxIterations": 1500},
  "seed": 7
})";

}  // namespace

TEST_CASE("generate-reference writes a valid waveform") {
  const auto dir = work_dir();
  const auto out = dir / "ref.csv";
  CHECK(run_cli("generate-reference --num-tx 4 --num-samples 16 --out " + out.string()) == 0);

  const auto t = cli::read_waveform_csv(out.string());
  REQUIRE(t.size() == 64);
  CHECK(t[0].real() == doctest::Approx(0.125).epsilon(1e-12));
  const double e = linalg::norm2(t);
  CHECK(e * e == doctest::Approx(1.0).epsilon(1e-12));

  const auto one = dir / "one.csv";
  CHECK(run_cli("generate-reference --num-tx 1 --num-samples 1 --out " + one.string()) == 0);
  const auto t1 = cli::read_waveform_csv(one.string());
  REQUIRE(t1.size() == 1);
  CHECK(std::abs(t1[0] - cd{1.0, 0.0}) < 1e-12);
}

TEST_CASE("waveform csv round-trips") {
  const auto dir = work_dir();
  const auto ref = chirp_reference(3, 5);
  const auto path = dir / "wf.csv";
  cli::write_waveform_csv(path.string(), ref.vector);
  const auto back = cli::read_waveform_csv(path.string());
  REQUIRE(back.size() == ref.vector.size());
  for (std::size_t k = 0; k < back.size(); ++k)
    CHECK(std::abs(back[k] - ref.vector[k]) < 1e-12);
}

TEST_CASE("optimize produces the full bundle and is byte-deterministic") {
  const auto dir = work_dir();
  const auto scen = dir / "scenario.json";
  write_file(scen, kTinyScenario);

  const auto out1 = dir / "run1";
  const auto out2 = dir / "run2";
  CHECK(run_cli("optimize --scenario " + scen.string() + " --out " + out1.string()) == 0);
  CHECK(run_cli("optimize --scenario " + scen.string() + " --out " + out2.string()) == 0);

  const char* files[] = {"sinr_trajectory.csv", "beampattern_reference.csv",
                         "beampattern_optimized.csv", "waveform_reference.csv",
                         "waveform_optimized.csv"};
  for (const char* f : files) {
    REQUIRE(fs::exists(out1 / f));
    CHECK(slurp(out1 / f) == slurp(out2 / f));
  }
  REQUIRE(fs::exists(out1 / "run_summary.json"));

  // header shapes
  std::istringstream traj(slurp(out1 / "sinr_trajectory.csv"));
  std::string header;
  std::getline(traj, header);
  CHECK(header == "refinement,delta_rad,sinr_db");
}

TEST_CASE("optimize with epsilon zero reproduces the reference file") {
  const auto dir = work_dir();
  const auto scen = dir / "scenario.json";
  write_file(scen, kTinyScenario);
  const auto out = dir / "eps0";
  CHECK(run_cli("optimize --scenario " + scen.string() + " --epsilon 0 --out " +
                out.string()) == 0);
  CHECK(slurp(out / "waveform_optimized.csv") == slurp(out / "waveform_reference.csv"));
}

TEST_CASE("exit codes: config, io, numerical") {
  const auto dir = work_dir();
  const auto scen = dir / "bad.json";

  write_file(scen, R"({"numTx": 2, "bogusKey": 1})");
  CHECK(run_cli("optimize --scenario " + scen.string() + " --out " + (dir / "o").string()) == 1);

  write_file(scen, R"({"epsilon": 7.0})");
  CHECK(run_cli("optimize --scenario " + scen.string() + " --out " + (dir / "o").string()) == 1);

  // missing scenario file is an I/O failure
  CHECK(run_cli("optimize --scenario " + (dir / "missing.json").string() + " --out " +
                (dir / "o").string()) == 2);

  // unwritable output path
  write_file(scen, kTinyScenario);
  CHECK(run_cli("generate-reference --out /nonexistent-dir/x.csv") == 2);

  // malformed waveform file
  const auto badwf = dir / "bad.csv";
  write_file(badwf, "index,real,imag,phase_rad\n0,not-a-number,0,0\n");
  CHECK(run_cli("beampattern --waveform " + badwf.string() +
                " --num-tx 1 --num-samples 1 --out " + (dir / "bp.csv").string()) == 2);

  // usage error
  CHECK(run_cli("optimize") == 1);
  CHECK(run_cli("no-such-command") == 1);
  CHECK(run_cli("--help") == 0);
}

TEST_CASE("validate agrees on a tiny clutter-free scene") {
  const auto dir = work_dir();
  const auto scen = dir / "scenario.json";
  write_file(scen, R"({
    "numTx": 2, "numRx": 2, "numSamples": 4,
    "targetAngleDeg": 10.0, "targetPowerDb": 10.0,
    "clutter": [],
    "seed": 11
  })");
  const auto wf = dir / "ref.csv";
  REQUIRE(run_cli("generate-reference --num-tx 2 --num-samples 4 --out " + wf.string()) == 0);

  CHECK(run_cli("validate --scenario " + scen.string() + " --waveform " + wf.string() +
                " --draws 100000") == 0);

  // too few draws is a config error
  CHECK(run_cli("validate --scenario " + scen.string() + " --waveform " + wf.string() +
                " --draws 10") == 1);

  // length mismatch
  const auto wrong = dir / "wrong.csv";
  REQUIRE(run_cli("generate-reference --num-tx 2 --num-samples 3 --out " + wrong.string()) == 0);
  CHECK(run_cli("validate --scenario " + scen.string() + " --waveform " + wrong.string()) == 1);
}

TEST_CASE("beampattern command flags nulls below the target") {
  const auto dir = work_dir();
  const auto scen = dir / "scenario.json";
  write_file(scen, kTinyScenario);
  const auto out = dir / "opt";
  REQUIRE(run_cli("optimize --scenario " + scen.string() + " --out " + out.string()) == 0);

  const auto bp = dir / "bp.csv";
  CHECK(run_cli("beampattern --waveform " + (out / "waveform_optimized.csv").string() +
                " --num-tx 2 --num-samples 4 --out " + bp.string()) == 0);
  std::istringstream rows(slurp(bp));
  std::string line;
  std::getline(rows, line);
  CHECK(line == "angle_deg,power_db");
  int count = 0;
  while (std::getline(rows, line))
    if (!line.empty()) ++count;
  CHECK(count == 361);
}
