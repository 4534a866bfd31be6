// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "tiller/telemetry_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "tiller/scenario_config.hpp"
#include "tiller/version.hpp"

namespace tiller {

namespace {

using nlohmann::json;

// Shortest 17-significant-digit form: round-trips exactly and diffs cleanly.
void append_double(std::string& line, double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  line += buffer;
}

json metrics_to_json(const Trajectory& trajectory, const Metrics& metrics) {
  json node;
  node["status"] = to_string(trajectory.status);
  if (!trajectory.completed()) {
    node["failure_time"] = trajectory.failure_time;
    node["failure_reason"] = trajectory.failure_reason;
  }
  node["records"] = trajectory.records.size();
  node["max_abs_delta"] = metrics.max_abs_delta;
  node["max_abs_delta_dot"] = metrics.max_abs_delta_dot;
  node["max_abs_eta"] = metrics.max_abs_eta;
  node["final_heading_error"] = metrics.final_heading_error;
  node["lyapunov_decay_rate"] = metrics.lyapunov_decay_rate;
  node["decay_fit_valid"] = metrics.decay_fit_valid;
  node["settling_time"] = metrics.settling_time;
  node["settled"] = metrics.settled;
  return node;
}

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  return out;
}

}  // namespace

void write_telemetry_csv(std::ostream& out, const Trajectory& trajectory) {
  out << kTelemetryCsvHeader << '\n';
  std::string line;
  for (const TelemetryRecord& rec : trajectory.records) {
    line.clear();
    const double columns[] = {rec.t,         rec.state.psi, rec.psi_d,
                              rec.state.r,   rec.state.delta, rec.delta_dot,
                              rec.state.xi,  rec.eta,       rec.z.z1,
                              rec.z.z2,      rec.z.z3,      rec.z.z4,
                              rec.lyapunov};
    bool first = true;
    for (double value : columns) {
      if (!first) {
        line += ',';
      }
      append_double(line, value);
      first = false;
    }
    line += '\n';
    out << line;
  }
}

void write_telemetry_csv_file(const std::string& path,
                              const Trajectory& trajectory) {
  std::ofstream out = open_or_throw(path);
  write_telemetry_csv(out, trajectory);
}

void write_metrics_json_file(const std::string& path,
                             const Trajectory& trajectory,
                             const Metrics& metrics) {
  std::ofstream out = open_or_throw(path);
  out << metrics_to_json(trajectory, metrics).dump(2) << '\n';
}

void write_run_manifest(const std::string& path, const ScenarioConfig& config,
                        const Trajectory& trajectory, const Metrics& metrics,
                        const std::string& telemetry_path,
                        const std::string& metrics_path) {
  json manifest;
  manifest["scenario"] = config.name;
  manifest["version"] = kVersion;
  manifest["config_digest"] = config_digest(config);
  manifest["status"] = to_string(trajectory.status);
  manifest["outputs"] = {{"telemetry", telemetry_path},
                         {"metrics", metrics_path}};
  manifest["metrics"] = metrics_to_json(trajectory, metrics);
  // The effective config; re-running it reproduces the outputs bit for bit.
  manifest["config"] = json::parse(canonical_config_json(config));

  std::ofstream out = open_or_throw(path);
  out << manifest.dump(2) << '\n';
}

}  // namespace tiller
