// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_AUX_CASCADE_H_
#define TILLER_AUX_CASCADE_H_

#include <stdexcept>
#include <string>

#include "tiller/plant.hpp"
#include "tiller/types.hpp"

namespace tiller {

// Raised when a state is close enough to a constraint boundary that the
// cascade gains degenerate (or the control output would blow up). The
// simulation harness catches it, attaches the time, and ends the run.
class BoundaryViolation : public std::runtime_error {
 public:
  enum class Kind {
    kAngleGuard,   // |delta| within eps_delta of max_angle
    kRateGuard,    // |xi| within eps_xi of the xi bound
    kControlCap,   // control output or its gain factor exceeded the cap
  };

  BoundaryViolation(Kind kind, double delta, double xi, double threshold);

  Kind kind() const { return kind_; }
  double delta() const { return delta_; }
  double xi() const { return xi_; }
  double threshold() const { return threshold_; }

 private:
  Kind kind_;
  double delta_;
  double xi_;
  double threshold_;
};

// The tanh-reparameterized rudder actuator. Writing the rudder angle as
// delta = max_angle * tanh(k_delta * delta_tilde) and its rate state as
// xi = xi_bound(delta) * tanh(k_xi * xi_tilde) makes both hard constraints
// structural: |delta| < max_angle and |g_delta(delta)*xi| < max_rate hold
// for every admissible state, for any finite input eta.
class AuxCascade {
 public:
  AuxCascade(ConstraintLimits limits, CascadeGains gains,
             GuardMargins margins = {});

  const ConstraintLimits& limits() const { return limits_; }
  const CascadeGains& gains() const { return gains_; }
  const GuardMargins& margins() const { return margins_; }

  // Rudder-rate gain g_delta(delta) = k_delta*(M^2 - delta^2)/M, where M is
  // the angle limit. Strictly positive inside the guard region.
  double g_delta(double delta) const;

  // d(g_delta)/d(delta) = -2*k_delta*delta/M.
  double dg_delta(double delta) const;

  // Admissible bound on |xi|: M*R/(k_delta*(M^2 - delta^2)) = R/g_delta.
  double xi_bound(double delta) const;

  // Drift of the xi equation: f_xi = 2*k_delta*delta*xi^2/M.
  double f_xi(double delta, double xi) const;

  // Input gain of the xi equation:
  //   g_xi = k_delta*k_xi*(M^2 - delta^2)/(M*R) * (xi_bound(delta)^2 - xi^2).
  // Strictly positive inside the guard region.
  double g_xi(double delta, double xi) const;

  // Time derivative of (psi, r, delta, xi) under input eta:
  //   psi' = r, r' = f(r) + b*delta, delta' = g_delta*xi, xi' = f_xi + g_xi*eta.
  // The returned delta' satisfies |delta'| < max_rate by construction.
  FullState rhs(const PlantModel& model, const FullState& state,
                double eta) const;

  // Inverse tanh maps, for diagnostics and initialization only; the
  // simulation state is (delta, xi) directly.
  double delta_tilde(double delta) const;
  double xi_tilde(double delta, double xi) const;

  // Guard predicates. check_* throw BoundaryViolation; the margin
  // accessors return the distance to the guard threshold (negative when
  // already past it).
  void check_delta(double delta) const;
  void check(double delta, double xi) const;
  double delta_guard_threshold() const;
  double angle_margin(double delta) const;
  double rate_margin(double delta, double xi) const;

 private:
  double g_delta_raw(double delta) const;
  double xi_bound_raw(double delta) const;

  ConstraintLimits limits_;
  CascadeGains gains_;
  GuardMargins margins_;
};

}  // namespace tiller

#endif  // TILLER_AUX_CASCADE_H_
