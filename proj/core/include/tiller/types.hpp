// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_TYPES_H_
#define TILLER_TYPES_H_

#include <cmath>

namespace tiller {

// All angles are in degrees, angular rates in deg/s. The library uses one
// global unit convention and never converts internally.

// Heading/yaw pair of the bare maneuvering model.
struct ShipKinematicState {
  double psi = 0.0;  // heading angle [deg]
  double r = 0.0;    // yaw angular velocity [deg/s]
};

// Full state of the constrained closed loop: heading, yaw rate, rudder
// angle, and the auxiliary rudder-rate state of the actuator cascade.
struct FullState {
  double psi = 0.0;    // heading angle [deg]
  double r = 0.0;      // yaw angular velocity [deg/s]
  double delta = 0.0;  // rudder angle [deg]
  double xi = 0.0;     // auxiliary rate state; rudder rate is g_delta(delta)*xi

  bool finite() const {
    return std::isfinite(psi) && std::isfinite(r) && std::isfinite(delta) &&
           std::isfinite(xi);
  }
};

inline FullState operator+(const FullState& a, const FullState& b) {
  return {a.psi + b.psi, a.r + b.r, a.delta + b.delta, a.xi + b.xi};
}

inline FullState operator*(double s, const FullState& a) {
  return {s * a.psi, s * a.r, s * a.delta, s * a.xi};
}

// Hard actuator limits.
struct ConstraintLimits {
  double max_angle = 35.0;  // rudder angle bound [deg], > 0
  double max_rate = 20.0;   // rudder rate bound [deg/s], > 0
};

// Design gains of the tanh actuator cascade.
struct CascadeGains {
  double k_delta = 1.0;  // angle-channel gain [1/deg], > 0
  double k_xi = 1.0;     // rate-channel gain, > 0
};

// Relative interior margins at which states are rejected before the cascade
// gains g_delta/g_xi degenerate. A state within fraction eps of a boundary
// raises BoundaryViolation instead of producing a near-singular gain.
struct GuardMargins {
  double eps_delta = 1e-3;  // fraction of max_angle, in (0,1)
  double eps_xi = 1e-3;     // fraction of the xi bound, in (0,1)
};

// Backstepping design parameters, all strictly positive.
struct BacksteppingGains {
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 1.0;
  double c4 = 1.0;
};

// Backstepping error coordinates z1..z4. z1 is the heading error in deg;
// the later components mix units and are treated as raw numerics.
struct ErrorVector {
  double z1 = 0.0;
  double z2 = 0.0;
  double z3 = 0.0;
  double z4 = 0.0;
};

// Target heading and its time derivatives through 4th order at one instant.
struct ReferenceSample {
  double psi_d = 0.0;    // [deg]
  double dpsi_d = 0.0;   // [deg/s]
  double d2psi_d = 0.0;  // [deg/s^2]
  double d3psi_d = 0.0;  // [deg/s^3]
  double d4psi_d = 0.0;  // [deg/s^4]
};

}  // namespace tiller

#endif  // TILLER_TYPES_H_
