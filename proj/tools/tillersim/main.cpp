// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tiller/commands.hpp"
#include "tiller/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"tillersim - constrained ship-steering simulator"};
  app.set_version_flag("--version", tiller::kVersion);
  app.require_subcommand(1);

  std::string config;
  std::string out_dir = "out";
  std::vector<double> values;
  std::uint64_t seed = 0;
  double dt = 0.0;

  auto* run = app.add_subcommand("run", "simulate one scenario");
  run->add_option("config", config,
                  "config file or preset name (see --help-presets in README)")
      ->required();
  run->add_option("--out", out_dir, "output directory");
  auto* run_seed = run->add_option("--seed", seed, "override the RNG seed");
  auto* run_dt = run->add_option("--dt", dt, "override the time step [s]");

  auto* sweep = app.add_subcommand(
      "sweep", "run a preset once per target heading change");
  sweep->add_option("config", config, "tanh-step config file or preset name")
      ->required();
  sweep->add_option("--values", values, "target heading changes [deg]")
      ->required()
      ->delimiter(',');
  sweep->add_option("--out", out_dir, "output directory");
  auto* sweep_seed = sweep->add_option("--seed", seed, "override the RNG seed");
  auto* sweep_dt = sweep->add_option("--dt", dt, "override the time step [s]");

  auto* check = app.add_subcommand(
      "check", "evaluate the exact-tracking feasibility conditions");
  check->add_option("config", config, "config file or preset name")
      ->required();

  CLI11_PARSE(app, argc, argv);

  tiller::RunOverrides overrides;
  if (run_seed->count() > 0 || sweep_seed->count() > 0) {
    overrides.seed = seed;
  }
  if (run_dt->count() > 0 || sweep_dt->count() > 0) {
    overrides.dt = dt;
  }

  if (app.got_subcommand(run)) {
    return tiller::cmd_run(config, out_dir, overrides, std::cout, std::cerr);
  }
  if (app.got_subcommand(sweep)) {
    return tiller::cmd_sweep(config, values, out_dir, overrides, std::cout,
                             std::cerr);
  }
  return tiller::cmd_check(config, std::cout, std::cerr);
}
