// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_TESTS_TEST_SUPPORT_H_
#define TILLER_TESTS_TEST_SUPPORT_H_

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include "tiller/simulation.hpp"

namespace tiller::testing {

// Identified model-ship coefficients and actuator limits used throughout
// the tests (K=0.21, T=8.8, H(r)=0.23r^3+0.41r; |delta|<=35, |ddelta|<=20).
inline PlantModel test_plant() { return PlantModel::esso_osaka(); }
inline ConstraintLimits test_limits() { return ConstraintLimits{35.0, 20.0}; }

// |a - b| <= rtol * max(|a|, |b|, floor)
inline bool close_rel(double a, double b, double rtol, double floor = 0.0) {
  return std::abs(a - b) <=
         rtol * std::max({std::abs(a), std::abs(b), floor});
}

// Central finite difference of a callable.
template <typename F>
double central_diff(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Baseline Case-1 style scenario: proposed controller, default gains,
// maneuver starting 2.8 widths after t=0 like the shipped presets.
inline ScenarioConfig case1_scenario(double target_change) {
  ScenarioConfig config;
  config.name = "case1_test";
  config.model = test_plant();
  config.limits = test_limits();
  TanhReference ref = TanhReference::for_change(target_change);
  ref.center_time = 2.8 * ref.width;
  config.reference = ref;
  config.dt = 0.01;
  config.horizon = 100.0;
  return config;
}

// Pure relaxation: constant zero reference, small initial heading error.
inline ScenarioConfig relaxation_scenario(double psi0) {
  ScenarioConfig config;
  config.name = "relaxation";
  config.model = test_plant();
  config.limits = test_limits();
  config.reference = ConstantReference{0.0};
  config.initial.psi = psi0;
  config.dt = 0.01;
  config.horizon = 100.0;
  return config;
}

// Scratch directory unique to a test, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("tiller_test_" + tag + "_" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Preset directory: $TILLER_PRESET_DIR (set by ctest) or ./presets.
inline std::string preset_dir() {
  if (const char* dir = std::getenv("TILLER_PRESET_DIR")) {
    return dir;
  }
  return "presets";
}

}  // namespace tiller::testing

#endif  // TILLER_TESTS_TEST_SUPPORT_H_
