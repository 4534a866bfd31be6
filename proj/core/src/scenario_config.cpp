// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "tiller/scenario_config.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace tiller {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path.empty() ? message : path + ": " + message);
}

std::string join(const std::string& section, const std::string& key) {
  return section.empty() ? key : section + "." + key;
}

void expect_object(const json& node, const std::string& path) {
  if (!node.is_object()) {
    fail(path, "expected an object");
  }
}

void reject_unknown_keys(const json& node, const std::string& path,
                         std::initializer_list<const char*> known) {
  for (const auto& item : node.items()) {
    bool found = false;
    for (const char* k : known) {
      if (item.key() == k) {
        found = true;
        break;
      }
    }
    if (!found) {
      fail(join(path, item.key()), "unknown key");
    }
  }
}

double get_number(const json& node, const std::string& section,
                  const std::string& key, double fallback) {
  if (!node.contains(key)) {
    return fallback;
  }
  const json& v = node.at(key);
  if (!v.is_number()) {
    fail(join(section, key), "expected a number");
  }
  return v.get<double>();
}

double require_number(const json& node, const std::string& section,
                      const std::string& key) {
  if (!node.contains(key)) {
    fail(join(section, key), "missing required key");
  }
  return get_number(node, section, key, 0.0);
}

std::string get_string(const json& node, const std::string& section,
                       const std::string& key, const std::string& fallback) {
  if (!node.contains(key)) {
    return fallback;
  }
  const json& v = node.at(key);
  if (!v.is_string()) {
    fail(join(section, key), "expected a string");
  }
  return v.get<std::string>();
}

PlantKind parse_plant_kind(const std::string& text) {
  if (text == "nomoto") return PlantKind::kNomoto;
  if (text == "norrbin") return PlantKind::kNorrbin;
  if (text == "custom-polynomial") return PlantKind::kCustomPolynomial;
  fail("model.kind",
       "must be one of nomoto | norrbin | custom-polynomial, got '" + text +
           "'");
}

ControllerKind parse_controller_kind(const std::string& text) {
  if (text == "proposed") return ControllerKind::kProposed;
  if (text == "conventional-saturated")
    return ControllerKind::kConventionalSaturated;
  if (text == "conventional-servo") return ControllerKind::kConventionalServo;
  fail("controller.kind",
       "must be one of proposed | conventional-saturated | "
       "conventional-servo, got '" +
           text + "'");
}

Reference parse_reference(const json& node) {
  expect_object(node, "reference");
  const std::string kind = get_string(node, "reference", "kind", "");
  if (kind == "tanh-step") {
    reject_unknown_keys(node, "reference",
                        {"kind", "target_change", "center_time", "width"});
    TanhReference ref =
        TanhReference::for_change(require_number(node, "reference",
                                                 "target_change"));
    ref.center_time = get_number(node, "reference", "center_time",
                                 ref.center_time);
    ref.width = get_number(node, "reference", "width", ref.width);
    return ref;
  }
  if (kind == "constant") {
    reject_unknown_keys(node, "reference", {"kind", "heading"});
    return ConstantReference{get_number(node, "reference", "heading", 0.0)};
  }
  if (kind == "sine") {
    reject_unknown_keys(node, "reference",
                        {"kind", "amplitude", "angular_rate", "phase"});
    SineReference ref;
    ref.amplitude = require_number(node, "reference", "amplitude");
    ref.angular_rate = require_number(node, "reference", "angular_rate");
    ref.phase = get_number(node, "reference", "phase", 0.0);
    return ref;
  }
  fail("reference.kind",
       "must be one of tanh-step | constant | sine, got '" + kind + "'");
}

ScenarioConfig from_json(const json& root) {
  expect_object(root, "");
  reject_unknown_keys(root, "",
                      {"name", "model", "limits", "cascade", "backstepping",
                       "guard", "controller", "servo", "reference", "sim"});

  ScenarioConfig config;
  config.name = root.contains("name")
                    ? get_string(root, "", "name", config.name)
                    : config.name;

  if (root.contains("model")) {
    const json& node = root.at("model");
    expect_object(node, "model");
    reject_unknown_keys(node, "model",
                        {"kind", "K", "T", "n0", "n1", "n2", "n3"});
    PlantModel m;
    m.kind = parse_plant_kind(get_string(node, "model", "kind", "norrbin"));
    m.K = require_number(node, "model", "K");
    m.T = require_number(node, "model", "T");
    m.n0 = get_number(node, "model", "n0", 0.0);
    m.n1 = get_number(node, "model", "n1", 0.0);
    m.n2 = get_number(node, "model", "n2", 0.0);
    m.n3 = get_number(node, "model", "n3", 0.0);
    config.model = m;
  }

  if (root.contains("limits")) {
    const json& node = root.at("limits");
    expect_object(node, "limits");
    reject_unknown_keys(node, "limits", {"max_angle", "max_rate"});
    config.limits.max_angle =
        get_number(node, "limits", "max_angle", config.limits.max_angle);
    config.limits.max_rate =
        get_number(node, "limits", "max_rate", config.limits.max_rate);
  }

  if (root.contains("cascade")) {
    const json& node = root.at("cascade");
    expect_object(node, "cascade");
    reject_unknown_keys(node, "cascade", {"k_delta", "k_xi"});
    config.cascade.k_delta =
        get_number(node, "cascade", "k_delta", config.cascade.k_delta);
    config.cascade.k_xi =
        get_number(node, "cascade", "k_xi", config.cascade.k_xi);
  }

  if (root.contains("backstepping")) {
    const json& node = root.at("backstepping");
    expect_object(node, "backstepping");
    reject_unknown_keys(node, "backstepping", {"c1", "c2", "c3", "c4"});
    config.backstepping.c1 =
        get_number(node, "backstepping", "c1", config.backstepping.c1);
    config.backstepping.c2 =
        get_number(node, "backstepping", "c2", config.backstepping.c2);
    config.backstepping.c3 =
        get_number(node, "backstepping", "c3", config.backstepping.c3);
    config.backstepping.c4 =
        get_number(node, "backstepping", "c4", config.backstepping.c4);
  }

  if (root.contains("guard")) {
    const json& node = root.at("guard");
    expect_object(node, "guard");
    reject_unknown_keys(node, "guard", {"eps_delta", "eps_xi"});
    config.guard.eps_delta =
        get_number(node, "guard", "eps_delta", config.guard.eps_delta);
    config.guard.eps_xi =
        get_number(node, "guard", "eps_xi", config.guard.eps_xi);
  }

  if (root.contains("controller")) {
    const json& node = root.at("controller");
    expect_object(node, "controller");
    reject_unknown_keys(node, "controller", {"kind", "output_cap"});
    config.controller = parse_controller_kind(
        get_string(node, "controller", "kind", "proposed"));
    config.control_cap =
        get_number(node, "controller", "output_cap", config.control_cap);
  }

  if (root.contains("servo")) {
    const json& node = root.at("servo");
    expect_object(node, "servo");
    reject_unknown_keys(node, "servo", {"time_constant", "gain"});
    config.servo.time_constant =
        get_number(node, "servo", "time_constant", config.servo.time_constant);
    config.servo.gain = get_number(node, "servo", "gain", config.servo.gain);
  }

  if (root.contains("reference")) {
    config.reference = parse_reference(root.at("reference"));
  }

  if (root.contains("sim")) {
    const json& node = root.at("sim");
    expect_object(node, "sim");
    reject_unknown_keys(node, "sim",
                        {"dt", "horizon", "sigma", "seed", "initial"});
    config.dt = get_number(node, "sim", "dt", config.dt);
    config.horizon = get_number(node, "sim", "horizon", config.horizon);
    config.sigma = get_number(node, "sim", "sigma", config.sigma);
    if (node.contains("seed")) {
      const json& seed = node.at("seed");
      if (!seed.is_number_integer() && !seed.is_number_unsigned()) {
        fail("sim.seed", "expected an integer");
      }
      config.seed = seed.get<std::uint64_t>();
    }
    if (node.contains("initial")) {
      const json& init = node.at("initial");
      expect_object(init, "sim.initial");
      reject_unknown_keys(init, "sim.initial", {"psi", "r", "delta", "xi"});
      config.initial.psi = get_number(init, "sim.initial", "psi", 0.0);
      config.initial.r = get_number(init, "sim.initial", "r", 0.0);
      config.initial.delta = get_number(init, "sim.initial", "delta", 0.0);
      config.initial.xi = get_number(init, "sim.initial", "xi", 0.0);
    }
  }

  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return config;
}

json reference_to_json(const Reference& ref) {
  return std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, TanhReference>) {
          return json{{"kind", "tanh-step"},
                      {"target_change", r.target_change},
                      {"center_time", r.center_time},
                      {"width", r.width}};
        } else if constexpr (std::is_same_v<T, SineReference>) {
          return json{{"kind", "sine"},
                      {"amplitude", r.amplitude},
                      {"angular_rate", r.angular_rate},
                      {"phase", r.phase}};
        } else {
          return json{{"kind", "constant"}, {"heading", r.heading}};
        }
      },
      ref);
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
    }
  }
  return line;
}

json scenario_to_json(const ScenarioConfig& config) {
  json root;
  root["name"] = config.name;
  root["model"] = {{"kind", to_string(config.model.kind)},
                   {"K", config.model.K},
                   {"T", config.model.T},
                   {"n0", config.model.n0},
                   {"n1", config.model.n1},
                   {"n2", config.model.n2},
                   {"n3", config.model.n3}};
  root["limits"] = {{"max_angle", config.limits.max_angle},
                    {"max_rate", config.limits.max_rate}};
  root["cascade"] = {{"k_delta", config.cascade.k_delta},
                     {"k_xi", config.cascade.k_xi}};
  root["backstepping"] = {{"c1", config.backstepping.c1},
                          {"c2", config.backstepping.c2},
                          {"c3", config.backstepping.c3},
                          {"c4", config.backstepping.c4}};
  root["guard"] = {{"eps_delta", config.guard.eps_delta},
                   {"eps_xi", config.guard.eps_xi}};
  root["controller"] = {{"kind", to_string(config.controller)},
                        {"output_cap", config.control_cap}};
  if (config.controller == ControllerKind::kConventionalServo) {
    root["servo"] = {{"time_constant", config.servo.time_constant},
                     {"gain", config.servo.gain}};
  }
  root["reference"] = reference_to_json(config.reference);
  root["sim"] = {{"dt", config.dt},
                 {"horizon", config.horizon},
                 {"sigma", config.sigma},
                 {"seed", config.seed},
                 {"initial",
                  {{"psi", config.initial.psi},
                   {"r", config.initial.r},
                   {"delta", config.initial.delta},
                   {"xi", config.initial.xi}}}};
  return root;
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error at line " +
                      std::to_string(line_of_offset(json_text, e.byte)) +
                      ": " + e.what());
  }
  return from_json(root);
}

ScenarioConfig load_scenario_config(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scenario_config(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string canonical_config_json(const ScenarioConfig& config) {
  // nlohmann objects are key-sorted; dump() without indent is canonical.
  return scenario_to_json(config).dump();
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string config_digest(const ScenarioConfig& config) {
  const std::string canonical = canonical_config_json(config);
  const std::uint64_t hash = fnv1a64(canonical.data(), canonical.size());
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buffer);
}

}  // namespace tiller
