// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "tiller/aux_cascade.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tiller {

namespace {

std::string violation_message(BoundaryViolation::Kind kind, double delta,
                              double xi, double threshold) {
  std::ostringstream os;
  switch (kind) {
    case BoundaryViolation::Kind::kAngleGuard:
      os << "rudder angle guard: |delta| = " << std::abs(delta)
         << " deg reached the guard threshold " << threshold << " deg";
      break;
    case BoundaryViolation::Kind::kRateGuard:
      os << "rate-state guard: |xi| = " << std::abs(xi)
         << " reached the guard threshold " << threshold << " at delta = "
         << delta << " deg";
      break;
    case BoundaryViolation::Kind::kControlCap:
      os << "control output cap: magnitude exceeded " << threshold
         << " at delta = " << delta << ", xi = " << xi;
      break;
  }
  return os.str();
}

}  // namespace

BoundaryViolation::BoundaryViolation(Kind kind, double delta, double xi,
                                     double threshold)
    : std::runtime_error(violation_message(kind, delta, xi, threshold)),
      kind_(kind),
      delta_(delta),
      xi_(xi),
      threshold_(threshold) {}

AuxCascade::AuxCascade(ConstraintLimits limits, CascadeGains gains,
                       GuardMargins margins)
    : limits_(limits), gains_(gains), margins_(margins) {
  if (!(limits_.max_angle > 0.0)) {
    throw std::invalid_argument("limits.max_angle: must be > 0");
  }
  if (!(limits_.max_rate > 0.0)) {
    throw std::invalid_argument("limits.max_rate: must be > 0");
  }
  if (!(gains_.k_delta > 0.0)) {
    throw std::invalid_argument("cascade.k_delta: must be > 0");
  }
  if (!(gains_.k_xi > 0.0)) {
    throw std::invalid_argument("cascade.k_xi: must be > 0");
  }
  if (!(margins_.eps_delta > 0.0 && margins_.eps_delta < 1.0)) {
    throw std::invalid_argument("guard.eps_delta: must be in (0, 1)");
  }
  if (!(margins_.eps_xi > 0.0 && margins_.eps_xi < 1.0)) {
    throw std::invalid_argument("guard.eps_xi: must be in (0, 1)");
  }
}

double AuxCascade::g_delta_raw(double delta) const {
  const double m = limits_.max_angle;
  return gains_.k_delta * (m * m - delta * delta) / m;
}

double AuxCascade::xi_bound_raw(double delta) const {
  const double m = limits_.max_angle;
  return m * limits_.max_rate / (gains_.k_delta * (m * m - delta * delta));
}

double AuxCascade::delta_guard_threshold() const {
  return limits_.max_angle * (1.0 - margins_.eps_delta);
}

double AuxCascade::angle_margin(double delta) const {
  return delta_guard_threshold() - std::abs(delta);
}

double AuxCascade::rate_margin(double delta, double xi) const {
  return xi_bound_raw(delta) * (1.0 - margins_.eps_xi) - std::abs(xi);
}

void AuxCascade::check_delta(double delta) const {
  if (!(angle_margin(delta) > 0.0)) {
    throw BoundaryViolation(BoundaryViolation::Kind::kAngleGuard, delta, 0.0,
                            delta_guard_threshold());
  }
}

void AuxCascade::check(double delta, double xi) const {
  check_delta(delta);
  if (!(rate_margin(delta, xi) > 0.0)) {
    throw BoundaryViolation(BoundaryViolation::Kind::kRateGuard, delta, xi,
                            xi_bound_raw(delta) * (1.0 - margins_.eps_xi));
  }
}

double AuxCascade::g_delta(double delta) const {
  check_delta(delta);
  return g_delta_raw(delta);
}

double AuxCascade::dg_delta(double delta) const {
  check_delta(delta);
  return -2.0 * gains_.k_delta * delta / limits_.max_angle;
}

double AuxCascade::xi_bound(double delta) const {
  check_delta(delta);
  return xi_bound_raw(delta);
}

double AuxCascade::f_xi(double delta, double xi) const {
  check(delta, xi);
  return 2.0 * gains_.k_delta * delta * xi * xi / limits_.max_angle;
}

double AuxCascade::g_xi(double delta, double xi) const {
  check(delta, xi);
  const double m = limits_.max_angle;
  const double bound = xi_bound_raw(delta);
  return gains_.k_delta * gains_.k_xi * (m * m - delta * delta) /
         (m * limits_.max_rate) * (bound * bound - xi * xi);
}

FullState AuxCascade::rhs(const PlantModel& model, const FullState& state,
                          double eta) const {
  check(state.delta, state.xi);
  const double m = limits_.max_angle;
  const double delta = state.delta;
  const double xi = state.xi;
  const double bound = xi_bound_raw(delta);
  const double fxi = 2.0 * gains_.k_delta * delta * xi * xi / m;
  const double gxi = gains_.k_delta * gains_.k_xi * (m * m - delta * delta) /
                     (m * limits_.max_rate) * (bound * bound - xi * xi);
  FullState d;
  d.psi = state.r;
  d.r = eval_dynamics(model, state.r, delta);
  d.delta = g_delta_raw(delta) * xi;
  d.xi = fxi + gxi * eta;
  return d;
}

double AuxCascade::delta_tilde(double delta) const {
  if (!(std::abs(delta) < limits_.max_angle)) {
    throw BoundaryViolation(BoundaryViolation::Kind::kAngleGuard, delta, 0.0,
                            limits_.max_angle);
  }
  return std::atanh(delta / limits_.max_angle) / gains_.k_delta;
}

double AuxCascade::xi_tilde(double delta, double xi) const {
  const double bound = xi_bound(delta);
  if (!(std::abs(xi) < bound)) {
    throw BoundaryViolation(BoundaryViolation::Kind::kRateGuard, delta, xi,
                            bound);
  }
  return std::atanh(xi / bound) / gains_.k_xi;
}

}  // namespace tiller
