// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_SCENARIO_CONFIG_H_
#define TILLER_SCENARIO_CONFIG_H_

#include <optional>
#include <stdexcept>
#include <string>

#include "tiller/simulation.hpp"

namespace tiller {

// Config-file problem with the field path (e.g. "limits.max_angle") or the
// line number of a parse error already folded into the message.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message)
      : std::runtime_error(message) {}
};

// Parses and validates a scenario config from a JSON file. Unknown keys are
// rejected so typos fail loudly. Throws ConfigError.
ScenarioConfig load_scenario_config(const std::string& path);

// Same, from an in-memory JSON document.
ScenarioConfig parse_scenario_config(const std::string& json_text);

// Canonical serialization of the effective config: sorted keys, no
// insignificant whitespace, full-precision floats. Equal configs produce
// byte-equal strings, so the digest below is stable.
std::string canonical_config_json(const ScenarioConfig& config);

// FNV-1a 64-bit digest of the canonical serialization, rendered as 16 hex
// digits.
std::string config_digest(const ScenarioConfig& config);

// FNV-1a 64-bit over arbitrary bytes (also used for file digests).
std::uint64_t fnv1a64(const void* data, std::size_t size);

}  // namespace tiller

#endif  // TILLER_SCENARIO_CONFIG_H_
