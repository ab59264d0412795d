#include "cli/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace agpwave::cli {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  return out;
}

}  // namespace

void write_waveform_csv(const std::string& path, std::span<const cd> t) {
  auto out = open_out(path);
  out << "index,real,imag,phase_rad\n";
  for (std::size_t k = 0; k < t.size(); ++k)
    out << k << ',' << fmt(t[k].real()) << ',' << fmt(t[k].imag()) << ','
        << fmt(std::arg(t[k])) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

Waveform read_waveform_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open waveform file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty waveform file: " + path);

  Waveform t;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    double vals[3];
    std::getline(row, cell, ',');  // index column, unused
    for (int c = 0; c < 3; ++c) {
      if (!std::getline(row, cell, ','))
        throw IoError("malformed waveform row " + std::to_string(lineno) + " in " + path);
      try {
        std::size_t used = 0;
        vals[c] = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw IoError("malformed waveform row " + std::to_string(lineno) + " in " + path);
      }
    }
    t.emplace_back(vals[0], vals[1]);
  }
  if (t.empty()) throw IoError("no waveform rows in " + path);
  return t;
}

void write_trajectory_csv(const std::string& path, const std::vector<TrajectoryRow>& rows) {
  auto out = open_out(path);
  out << "refinement,delta_rad,sinr_db\n";
  for (const auto& r : rows)
    out << r.refinement << ',' << fmt(r.delta_rad) << ',' << fmt(r.sinr_db) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

void write_beampattern_csv(const std::string& path,
                           const std::vector<BeampatternSample>& samples) {
  auto out = open_out(path);
  out << "angle_deg,power_db\n";
  for (const auto& s : samples)
    out << fmt(s.angle_deg) << ',' << fmt(s.power_db) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace agpwave::cli
