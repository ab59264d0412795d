#include "cli/scenario.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "agpwave/beampattern.hpp"
#include "cli/csv.hpp"

namespace agpwave::cli {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.contains(key))
      throw std::invalid_argument("unknown scenario key: " + where + key);
  }
}

double require_number(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number())
    throw std::invalid_argument("scenario field must be a number: " + key);
  return obj[key].get<double>();
}

int require_int(const json& obj, const std::string& key, int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer())
    throw std::invalid_argument("scenario field must be an integer: " + key);
  return obj[key].get<int>();
}

}  // namespace

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path);

  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario parse error: ") + e.what());
  }
  if (!root.is_object()) throw std::invalid_argument("scenario must be a JSON object");

  reject_unknown_keys(root,
                      {"numTx", "numRx", "numSamples", "targetAngleDeg", "targetPowerDb",
                       "clutter", "epsilon", "solver", "pipeline", "seed"},
                      "");

  Scenario s;
  s.num_tx = require_int(root, "numTx", s.num_tx);
  s.num_rx = require_int(root, "numRx", s.num_rx);
  s.num_samples = require_int(root, "numSamples", s.num_samples);
  s.target_angle_deg = require_number(root, "targetAngleDeg", s.target_angle_deg);
  s.target_power_db = require_number(root, "targetPowerDb", s.target_power_db);
  s.epsilon = require_number(root, "epsilon", s.epsilon);

  if (root.contains("clutter")) {
    if (!root["clutter"].is_array())
      throw std::invalid_argument("scenario field must be an array: clutter");
    s.clutter.clear();
    for (const auto& entry : root["clutter"]) {
      if (!entry.is_object())
        throw std::invalid_argument("clutter entries must be objects");
      reject_unknown_keys(entry, {"angleDeg", "powerDb"}, "clutter.");
      if (!entry.contains("angleDeg") || !entry.contains("powerDb"))
        throw std::invalid_argument("clutter entries need angleDeg and powerDb");
      s.clutter.push_back({entry["angleDeg"].get<double>(), entry["powerDb"].get<double>()});
    }
  }

  if (root.contains("solver")) {
    const json& sv = root["solver"];
    if (!sv.is_object()) throw std::invalid_argument("scenario field must be an object: solver");
    reject_unknown_keys(sv, {"zeta", "maxIterations"}, "solver.");
    s.zeta = require_number(sv, "zeta", s.zeta);
    s.max_iterations = require_int(sv, "maxIterations", s.max_iterations);
  }

  if (root.contains("pipeline")) {
    const json& pl = root["pipeline"];
    if (!pl.is_object())
      throw std::invalid_argument("scenario field must be an object: pipeline");
    reject_unknown_keys(pl, {"deltaMinRad"}, "pipeline.");
    if (pl.contains("deltaMinRad")) {
      const double dm = require_number(pl, "deltaMinRad", 0.0);
      if (!(dm > 0.0))
        throw std::invalid_argument("pipeline.deltaMinRad must be positive");
      s.delta_min_rad = dm;
    }
  }

  if (root.contains("seed")) {
    if (!root["seed"].is_number_integer() || root["seed"].get<std::int64_t>() < 0)
      throw std::invalid_argument("scenario field must be a nonnegative integer: seed");
    s.seed = root["seed"].get<std::uint64_t>();
  }

  if (!(s.epsilon >= 0.0 && s.epsilon <= 2.0))
    throw std::invalid_argument("epsilon must lie in [0, 2]");
  if (!(s.zeta > 0.0)) throw std::invalid_argument("solver.zeta must be positive");
  if (s.max_iterations < 2)
    throw std::invalid_argument("solver.maxIterations must be >= 2");
  return s;
}

Scene to_scene(const Scenario& s) {
  Scene scene;
  scene.num_tx = s.num_tx;
  scene.num_rx = s.num_rx;
  scene.num_samples = s.num_samples;
  scene.target_angle_rad = s.target_angle_deg * std::numbers::pi / 180.0;
  scene.target_power_ratio = db_to_linear(s.target_power_db);
  for (const auto& c : s.clutter)
    scene.clutter.push_back(
        {c.angle_deg * std::numbers::pi / 180.0, db_to_linear(c.power_db)});
  scene.validate();
  return scene;
}

PipelineConfig to_pipeline_config(const Scenario& s) {
  PipelineConfig cfg;
  cfg.epsilon = s.epsilon;
  cfg.delta_min = s.delta_min_rad.value_or(0.0);
  cfg.solver.zeta = s.zeta;
  cfg.solver.max_iterations = s.max_iterations;
  return cfg;
}

}  // namespace agpwave::cli
