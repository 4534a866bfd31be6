// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_TELEMETRY_IO_H_
#define TILLER_TELEMETRY_IO_H_

#include <iosfwd>
#include <string>

#include "tiller/simulation.hpp"

namespace tiller {

// Fixed telemetry CSV schema. One header row, then one row per record with
// every float printed at 17 significant digits so files diff exactly.
inline constexpr const char* kTelemetryCsvHeader =
    "t,psi,psi_d,r,delta,delta_dot,xi,eta,z1,z2,z3,z4,V";

void write_telemetry_csv(std::ostream& out, const Trajectory& trajectory);
void write_telemetry_csv_file(const std::string& path,
                              const Trajectory& trajectory);

// metrics.json: termination status plus the Metrics fields.
void write_metrics_json_file(const std::string& path,
                             const Trajectory& trajectory,
                             const Metrics& metrics);

// manifest.json: scenario name, config digest, code version, output paths,
// status, metrics summary, and the full effective config (enough to re-run
// the scenario bit-identically).
void write_run_manifest(const std::string& path, const ScenarioConfig& config,
                        const Trajectory& trajectory, const Metrics& metrics,
                        const std::string& telemetry_path,
                        const std::string& metrics_path);

}  // namespace tiller

#endif  // TILLER_TELEMETRY_IO_H_
