// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_SIMULATION_H_
#define TILLER_SIMULATION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "tiller/aux_cascade.hpp"
#include "tiller/controller.hpp"
#include "tiller/plant.hpp"
#include "tiller/reference.hpp"
#include "tiller/types.hpp"

namespace tiller {

enum class ControllerKind {
  kProposed,               // constrained cascade + backstepping input eta
  kConventionalSaturated,  // unconstrained command through sat + rate limit
  kConventionalServo,      // unconstrained command through first-order servo
};

const char* to_string(ControllerKind kind);

// First-order steering gear delta' = (gain*command - delta)/time_constant.
struct ServoParams {
  double time_constant = 2.5;  // [s], > 0
  double gain = 1.0;           // > 0
};

// One Euler step of the servo followed by a magnitude clip to max_angle and
// a rate clip to max_rate against the previous angle.
double servo_actuator_step(double delta, double delta_cmd,
                           const ServoParams& servo,
                           const ConstraintLimits& limits, double dt);

// A complete closed-loop scenario. Loaded from JSON config files (see
// scenario_config.hpp) or built directly in code.
struct ScenarioConfig {
  std::string name = "scenario";
  PlantModel model = PlantModel::esso_osaka();
  ConstraintLimits limits;
  CascadeGains cascade;
  BacksteppingGains backstepping;
  GuardMargins guard;
  ControllerKind controller = ControllerKind::kProposed;
  double control_cap = kDefaultControlCap;
  ServoParams servo;
  Reference reference = ConstantReference{};
  double dt = 0.01;        // [s], > 0
  double horizon = 100.0;  // [s], >= dt
  double sigma = 0.0;      // noise intensity on r [deg/s per sqrt(s)], >= 0
  std::uint64_t seed = 0;
  FullState initial;

  // Throws std::invalid_argument with the offending field path.
  void validate() const;
};

// Per-step log record. delta_dot is analytic for the proposed controller
// (g_delta*xi, so the rate bound is exact) and the realized per-step rate
// for the baseline actuators. eta holds the cascade input for the proposed
// controller and the unclipped rudder command for the baselines.
struct TelemetryRecord {
  double t = 0.0;
  FullState state;
  double psi_d = 0.0;
  double eta = 0.0;
  double delta_dot = 0.0;
  ErrorVector z;
  double lyapunov = 0.0;
  double angle_margin = 0.0;  // distance to the angle guard threshold [deg]
  double rate_margin = 0.0;   // distance to the xi guard threshold
};

enum class RunStatus {
  kCompleted,
  kGuardViolation,
  kNumericFailure,
};

const char* to_string(RunStatus status);

struct Trajectory {
  std::vector<TelemetryRecord> records;
  RunStatus status = RunStatus::kCompleted;
  double failure_time = 0.0;   // meaningful unless completed
  std::string failure_reason;  // empty when completed

  bool completed() const { return status == RunStatus::kCompleted; }
};

// Runs the configured closed loop on the uniform grid t = k*dt,
// k = 0..round(horizon/dt), logging one record per grid point (endpoints
// inclusive). Identical configs (including seed) produce bitwise-identical
// trajectories. Guard trips and non-finite states end the run early with
// the corresponding status instead of throwing.
Trajectory run_scenario(const ScenarioConfig& config);

struct MetricsOptions {
  double decay_fit_floor = 1e-12;  // fit log V only while V stays above this
  double settle_band = 0.1;        // |heading error| band for settling [deg]
};

struct Metrics {
  double max_abs_delta = 0.0;
  double max_abs_delta_dot = 0.0;
  double max_abs_eta = 0.0;
  double final_heading_error = 0.0;  // |psi - psi_d| at the last record
  double lyapunov_decay_rate = 0.0;  // positive rate a in V ~ exp(-a t)
  bool decay_fit_valid = false;
  double settling_time = 0.0;  // first t after which |e_psi| stays in band
  bool settled = false;
};

Metrics compute_metrics(const Trajectory& trajectory,
                        const MetricsOptions& options = {});

// Sign changes of the heading error over records with t in [t_from, t_to],
// ignoring samples with |e_psi| < deadband. Detects sustained oscillation
// without counting zero-crossing chatter of an already-converged error.
int count_sign_changes(const Trajectory& trajectory, double t_from,
                       double t_to, double deadband);

}  // namespace tiller

#endif  // TILLER_SIMULATION_H_
