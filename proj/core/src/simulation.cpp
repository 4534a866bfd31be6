// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "tiller/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tiller/integrators.hpp"
#include "tiller/rng.hpp"

namespace tiller {

const char* to_string(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::kProposed:
      return "proposed";
    case ControllerKind::kConventionalSaturated:
      return "conventional-saturated";
    case ControllerKind::kConventionalServo:
      return "conventional-servo";
  }
  return "unknown";
}

const char* to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kCompleted:
      return "completed";
    case RunStatus::kGuardViolation:
      return "guard_violation";
    case RunStatus::kNumericFailure:
      return "numeric_failure";
  }
  return "unknown";
}

double servo_actuator_step(double delta, double delta_cmd,
                           const ServoParams& servo,
                           const ConstraintLimits& limits, double dt) {
  const double raw =
      delta + dt * (servo.gain * delta_cmd - delta) / servo.time_constant;
  const double clipped = saturate(raw, limits.max_angle);
  return rate_limit(delta, clipped, limits.max_rate, dt);
}

void ScenarioConfig::validate() const {
  model.validate();
  if (!(limits.max_angle > 0.0)) {
    throw std::invalid_argument("limits.max_angle: must be > 0");
  }
  if (!(limits.max_rate > 0.0)) {
    throw std::invalid_argument("limits.max_rate: must be > 0");
  }
  if (!(cascade.k_delta > 0.0)) {
    throw std::invalid_argument("cascade.k_delta: must be > 0");
  }
  if (!(cascade.k_xi > 0.0)) {
    throw std::invalid_argument("cascade.k_xi: must be > 0");
  }
  if (!(guard.eps_delta > 0.0 && guard.eps_delta < 1.0)) {
    throw std::invalid_argument("guard.eps_delta: must be in (0, 1)");
  }
  if (!(guard.eps_xi > 0.0 && guard.eps_xi < 1.0)) {
    throw std::invalid_argument("guard.eps_xi: must be in (0, 1)");
  }
  for (double c : {backstepping.c1, backstepping.c2, backstepping.c3,
                   backstepping.c4}) {
    if (!(c > 0.0)) {
      throw std::invalid_argument("backstepping.c1..c4: must be > 0");
    }
  }
  if (!(control_cap > 0.0)) {
    throw std::invalid_argument("controller.output_cap: must be > 0");
  }
  if (controller == ControllerKind::kConventionalServo) {
    if (!(servo.time_constant > 0.0)) {
      throw std::invalid_argument("servo.time_constant: must be > 0");
    }
    if (!(servo.gain > 0.0)) {
      throw std::invalid_argument("servo.gain: must be > 0");
    }
  }
  tiller::validate(reference);
  if (!(dt > 0.0)) {
    throw std::invalid_argument("sim.dt: must be > 0");
  }
  if (!(horizon >= dt)) {
    throw std::invalid_argument("sim.horizon: must be >= sim.dt");
  }
  if (!(sigma >= 0.0)) {
    throw std::invalid_argument("sim.sigma: must be >= 0");
  }
  if (!initial.finite()) {
    throw std::invalid_argument("sim.initial: must be finite");
  }
}

namespace {

struct StepOutcome {
  double eta = 0.0;        // control input / unclipped command
  double delta_dot = 0.0;  // analytic (proposed) or realized rudder rate
  FullState logged;        // state as it acts over [t, t+dt)
  FullState next;          // state at t+dt
};

class ProposedLoop {
 public:
  ProposedLoop(const ScenarioConfig& config, const AuxCascade& aux)
      : config_(config), aux_(aux), rng_(config.seed) {}

  StepOutcome step(const FullState& state, const ReferenceSample& ref,
                   double dt) {
    StepOutcome out;
    out.logged = state;
    out.eta = proposed_control(config_.model, aux_, config_.backstepping,
                               state, ref, config_.control_cap);
    out.delta_dot = aux_.g_delta(state.delta) * state.xi;
    const auto rhs = [&](const FullState& s) {
      return aux_.rhs(config_.model, s, out.eta);
    };
    out.next = config_.sigma > 0.0
                   ? euler_maruyama_step(state, dt, rhs, config_.sigma, rng_)
                   : euler_step(state, dt, rhs);
    return out;
  }

 private:
  const ScenarioConfig& config_;
  const AuxCascade& aux_;
  GaussianStream rng_;
};

// Both baselines share the plant integration; they differ in how the
// actuator tracks the commanded rudder angle. The actuator slews first,
// then the plant integrates over [t, t+dt) with the new angle held.
class BaselineLoop {
 public:
  explicit BaselineLoop(const ScenarioConfig& config)
      : config_(config), rng_(config.seed) {}

  StepOutcome step(const FullState& state, const ReferenceSample& ref,
                   double dt) {
    StepOutcome out;
    const ShipKinematicState kin{state.psi, state.r};
    out.eta =
        conventional_control(config_.model, config_.backstepping, kin, ref);

    double new_delta = 0.0;
    if (config_.controller == ControllerKind::kConventionalSaturated) {
      new_delta =
          rate_limit(state.delta, saturate(out.eta, config_.limits.max_angle),
                     config_.limits.max_rate, dt);
    } else {
      new_delta = servo_actuator_step(state.delta, out.eta, config_.servo,
                                      config_.limits, dt);
    }
    out.delta_dot = (new_delta - state.delta) / dt;

    out.logged = state;
    out.logged.delta = new_delta;
    out.logged.xi = 0.0;

    const auto rhs = [&](const FullState& s) {
      return FullState{s.r, eval_dynamics(config_.model, s.r, s.delta), 0.0,
                       0.0};
    };
    out.next = config_.sigma > 0.0
                   ? euler_maruyama_step(out.logged, dt, rhs, config_.sigma,
                                         rng_)
                   : euler_step(out.logged, dt, rhs);
    out.next.delta = new_delta;
    out.next.xi = 0.0;
    return out;
  }

 private:
  const ScenarioConfig& config_;
  GaussianStream rng_;
};

}  // namespace

Trajectory run_scenario(const ScenarioConfig& config) {
  config.validate();

  const AuxCascade aux(config.limits, config.cascade, config.guard);
  const long steps = std::lround(config.horizon / config.dt);

  Trajectory trajectory;
  trajectory.records.reserve(static_cast<std::size_t>(steps) + 1);

  ProposedLoop proposed(config, aux);
  BaselineLoop baseline(config);

  FullState state = config.initial;
  for (long k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * config.dt;
    const ReferenceSample ref = sample(config.reference, t);

    if (!state.finite()) {
      trajectory.status = RunStatus::kNumericFailure;
      trajectory.failure_time = t;
      trajectory.failure_reason = "state became non-finite";
      return trajectory;
    }

    StepOutcome out;
    try {
      out = config.controller == ControllerKind::kProposed
                ? proposed.step(state, ref, config.dt)
                : baseline.step(state, ref, config.dt);
    } catch (const BoundaryViolation& violation) {
      trajectory.status = RunStatus::kGuardViolation;
      trajectory.failure_time = t;
      trajectory.failure_reason = violation.what();
      return trajectory;
    }

    TelemetryRecord record;
    record.t = t;
    record.state = out.logged;
    record.psi_d = ref.psi_d;
    record.eta = out.eta;
    record.delta_dot = out.delta_dot;
    if (config.controller == ControllerKind::kProposed) {
      record.z = error_vector(config.model, aux, config.backstepping,
                              out.logged, ref);
      record.angle_margin = aux.angle_margin(out.logged.delta);
      record.rate_margin = aux.rate_margin(out.logged.delta, out.logged.xi);
      // The cascade makes these bounds structural; a logged violation means
      // the integration itself went wrong, not the controller.
      if (!(std::abs(out.logged.delta) < config.limits.max_angle) ||
          !(std::abs(out.delta_dot) < config.limits.max_rate)) {
        trajectory.status = RunStatus::kNumericFailure;
        trajectory.failure_time = t;
        trajectory.failure_reason = "structural constraint check failed";
        return trajectory;
      }
    } else {
      record.z = error_vector_from_rate(config.model, config.backstepping,
                                        out.logged.psi, out.logged.r,
                                        out.logged.delta, out.delta_dot, ref);
      record.angle_margin = config.limits.max_angle -
                            std::abs(out.logged.delta);
      record.rate_margin = std::numeric_limits<double>::infinity();
    }
    record.lyapunov = lyapunov_value(record.z);
    trajectory.records.push_back(record);

    state = out.next;
  }

  trajectory.status = RunStatus::kCompleted;
  return trajectory;
}

Metrics compute_metrics(const Trajectory& trajectory,
                        const MetricsOptions& options) {
  Metrics m;
  const auto& records = trajectory.records;
  if (records.empty()) {
    return m;
  }

  for (const TelemetryRecord& rec : records) {
    m.max_abs_delta = std::max(m.max_abs_delta, std::abs(rec.state.delta));
    m.max_abs_delta_dot = std::max(m.max_abs_delta_dot, std::abs(rec.delta_dot));
    m.max_abs_eta = std::max(m.max_abs_eta, std::abs(rec.eta));
  }
  const TelemetryRecord& last = records.back();
  m.final_heading_error = std::abs(last.state.psi - last.psi_d);

  // Least-squares slope of log V(t) while V stays above the floor.
  double sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0;
  long n = 0;
  for (const TelemetryRecord& rec : records) {
    if (!(rec.lyapunov > options.decay_fit_floor)) {
      break;
    }
    const double y = std::log(rec.lyapunov);
    sum_t += rec.t;
    sum_y += y;
    sum_tt += rec.t * rec.t;
    sum_ty += rec.t * y;
    ++n;
  }
  const double denom = n * sum_tt - sum_t * sum_t;
  if (n >= 2 && denom > 0.0) {
    m.lyapunov_decay_rate = -(n * sum_ty - sum_t * sum_y) / denom;
    m.decay_fit_valid = true;
  }

  // First time after which the heading error never leaves the band.
  m.settled = false;
  for (std::size_t i = records.size(); i-- > 0;) {
    const double e = std::abs(records[i].state.psi - records[i].psi_d);
    if (e > options.settle_band) {
      if (i + 1 < records.size()) {
        m.settling_time = records[i + 1].t;
        m.settled = true;
      }
      break;
    }
    if (i == 0) {
      m.settling_time = records.front().t;
      m.settled = true;
    }
  }
  return m;
}

int count_sign_changes(const Trajectory& trajectory, double t_from,
                       double t_to, double deadband) {
  int changes = 0;
  int prev_sign = 0;
  for (const TelemetryRecord& rec : trajectory.records) {
    if (rec.t < t_from || rec.t > t_to) {
      continue;
    }
    const double e = rec.state.psi - rec.psi_d;
    if (std::abs(e) < deadband) {
      continue;
    }
    const int sign = e > 0.0 ? 1 : -1;
    if (prev_sign != 0 && sign != prev_sign) {
      ++changes;
    }
    prev_sign = sign;
  }
  return changes;
}

}  // namespace tiller
