// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "tiller/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "tiller/scenario_config.hpp"
#include "tiller/simulation.hpp"
#include "tiller/telemetry_io.hpp"

namespace tiller {

namespace fs = std::filesystem;

std::string resolve_config_path(const std::string& name_or_path) {
  if (fs::is_regular_file(name_or_path)) {
    return name_or_path;
  }
  const std::string file = name_or_path + ".json";
  if (const char* dir = std::getenv(kPresetDirEnvVar)) {
    const fs::path candidate = fs::path(dir) / file;
    if (fs::is_regular_file(candidate)) {
      return candidate.string();
    }
  }
  const fs::path fallback = fs::path("presets") / file;
  if (fs::is_regular_file(fallback)) {
    return fallback.string();
  }
  throw ConfigError("no config file or preset named '" + name_or_path + "'");
}

namespace {

ScenarioConfig load_with_overrides(const std::string& config_arg,
                                   const RunOverrides& overrides) {
  ScenarioConfig config =
      load_scenario_config(resolve_config_path(config_arg));
  if (overrides.seed) {
    config.seed = *overrides.seed;
  }
  if (overrides.dt) {
    config.dt = *overrides.dt;
    config.validate();
  }
  return config;
}

struct RunArtifacts {
  Trajectory trajectory;
  Metrics metrics;
};

RunArtifacts execute_and_write(const ScenarioConfig& config,
                               const fs::path& out_dir) {
  fs::create_directories(out_dir);
  RunArtifacts artifacts;
  artifacts.trajectory = run_scenario(config);
  artifacts.metrics = compute_metrics(artifacts.trajectory);

  const fs::path telemetry = out_dir / "telemetry.csv";
  const fs::path metrics = out_dir / "metrics.json";
  const fs::path manifest = out_dir / "manifest.json";
  write_telemetry_csv_file(telemetry.string(), artifacts.trajectory);
  write_metrics_json_file(metrics.string(), artifacts.trajectory,
                          artifacts.metrics);
  write_run_manifest(manifest.string(), config, artifacts.trajectory,
                     artifacts.metrics, telemetry.string(), metrics.string());
  return artifacts;
}

void print_feasibility(std::ostream& out, const FeasibilityReport& report) {
  out << "magnitude condition: " << (report.magnitude_ok ? "ok" : "VIOLATED")
      << "  (worst margin " << report.worst_margin_magnitude << " deg at t = "
      << report.worst_time_magnitude << " s)\n";
  out << "rate condition:      " << (report.rate_ok ? "ok" : "VIOLATED")
      << "  (worst margin " << report.worst_margin_rate << " deg/s at t = "
      << report.worst_time_rate << " s)\n";
}

std::string format_value(double value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace

int cmd_run(const std::string& config_arg, const std::string& out_dir,
            const RunOverrides& overrides, std::ostream& out,
            std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_with_overrides(config_arg, overrides);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  RunArtifacts artifacts;
  try {
    artifacts = execute_and_write(config, out_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const Trajectory& trajectory = artifacts.trajectory;
  const Metrics& metrics = artifacts.metrics;

  out << "scenario " << config.name << ": " << to_string(trajectory.status);
  if (!trajectory.completed()) {
    out << " at t = " << trajectory.failure_time << " s ("
        << trajectory.failure_reason << ")";
  }
  out << '\n';
  out << "records " << trajectory.records.size() << ", max|delta| "
      << metrics.max_abs_delta << " deg, max|delta_dot| "
      << metrics.max_abs_delta_dot << " deg/s, final heading error "
      << metrics.final_heading_error << " deg\n";
  out << "outputs in " << out_dir << '\n';
  return trajectory.completed() ? 0 : 1;
}

int cmd_check(const std::string& config_arg, std::ostream& out,
              std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_scenario_config(resolve_config_path(config_arg));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const FeasibilityReport report = check_feasibility(
      config.reference, config.model, config.limits, config.horizon,
      config.dt);
  out << "feasibility of '" << config.name << "' over " << config.horizon
      << " s (grid " << config.dt << " s):\n";
  print_feasibility(out, report);
  return report.ok() ? 0 : 1;
}

int cmd_sweep(const std::string& config_arg, const std::vector<double>& values,
              const std::string& out_dir, const RunOverrides& overrides,
              std::ostream& out, std::ostream& err) {
  ScenarioConfig base;
  try {
    base = load_with_overrides(config_arg, overrides);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (!std::holds_alternative<TanhReference>(base.reference) &&
      !values.empty()) {
    err << "error: sweep requires a tanh-step reference preset\n";
    return 2;
  }

  struct Row {
    double value;
    std::string status;
    double max_abs_delta = 0.0;
    double max_abs_delta_dot = 0.0;
    double final_error = 0.0;
  };
  std::vector<Row> rows;

  // The swept reference keeps the base preset's start offset (the ratio of
  // center time to width) while the width follows the default schedule, so
  // every run begins the same number of widths before the maneuver.
  double start_offset = 0.0;
  if (const auto* base_ref = std::get_if<TanhReference>(&base.reference)) {
    start_offset = base_ref->center_time / base_ref->width;
  }

  for (double value : values) {
    ScenarioConfig config = base;
    TanhReference swept = TanhReference::for_change(value);
    swept.center_time = start_offset * swept.width;
    config.reference = swept;
    std::ostringstream name;
    name << base.name << "_psi" << format_value(value);
    config.name = name.str();

    Row row;
    row.value = value;

    const FeasibilityReport report = check_feasibility(
        config.reference, config.model, config.limits, config.horizon,
        config.dt);
    if (!report.ok()) {
      row.status = "infeasible";
      rows.push_back(row);
      continue;
    }

    const RunArtifacts artifacts =
        execute_and_write(config, fs::path(out_dir) / config.name);
    row.status = to_string(artifacts.trajectory.status);
    row.max_abs_delta = artifacts.metrics.max_abs_delta;
    row.max_abs_delta_dot = artifacts.metrics.max_abs_delta_dot;
    row.final_error = artifacts.metrics.final_heading_error;
    rows.push_back(row);
  }

  out << std::left << std::setw(10) << "target" << std::setw(12)
      << "max|delta|" << std::setw(16) << "max|delta_dot|" << std::setw(14)
      << "final_error" << "status" << '\n';
  for (const Row& row : rows) {
    out << std::left << std::setw(10) << format_value(row.value)
        << std::setw(12) << format_value(row.max_abs_delta) << std::setw(16)
        << format_value(row.max_abs_delta_dot) << std::setw(14)
        << format_value(row.final_error) << row.status << '\n';
  }

  fs::create_directories(out_dir);
  std::ofstream summary(fs::path(out_dir) / "summary.csv");
  summary << "target,max_abs_delta,max_abs_delta_dot,final_error,status\n";
  for (const Row& row : rows) {
    summary << format_value(row.value) << ',' << format_value(row.max_abs_delta)
            << ',' << format_value(row.max_abs_delta_dot) << ','
            << format_value(row.final_error) << ',' << row.status << '\n';
  }
  return 0;
}

}  // namespace tiller
