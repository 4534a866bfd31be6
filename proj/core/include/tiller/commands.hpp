// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_COMMANDS_H_
#define TILLER_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tiller {

// Environment variable naming the directory searched for presets when a
// config argument is not an existing file.
inline constexpr const char* kPresetDirEnvVar = "TILLER_PRESET_DIR";

// Resolves a config argument: an existing path is used as-is, otherwise
// "<name>.json" is looked up in $TILLER_PRESET_DIR, then in ./presets.
// Throws ConfigError when nothing matches.
std::string resolve_config_path(const std::string& name_or_path);

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> dt;
};

// Simulates one scenario and writes telemetry.csv, metrics.json, and
// manifest.json into out_dir. Returns 0 when the run completed, 1 on guard
// or numeric failure, 2 on config errors.
int cmd_run(const std::string& config, const std::string& out_dir,
            const RunOverrides& overrides, std::ostream& out,
            std::ostream& err);

// One run per target heading change, each in out_dir/<name>/, plus a
// summary table (stdout and out_dir/summary.csv). References that fail the
// feasibility pre-check are flagged and skipped; individual run failures
// are recorded per row and the sweep continues. Returns 0 unless the
// preset itself is unusable.
int cmd_sweep(const std::string& config, const std::vector<double>& values,
              const std::string& out_dir, const RunOverrides& overrides,
              std::ostream& out, std::ostream& err);

// Prints the feasibility report for the configured reference. Returns 0
// iff both the magnitude and rate conditions hold, 1 otherwise, 2 on
// config errors.
int cmd_check(const std::string& config, std::ostream& out,
              std::ostream& err);

}  // namespace tiller

#endif  // TILLER_COMMANDS_H_
