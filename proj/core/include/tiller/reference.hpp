// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_REFERENCE_H_
#define TILLER_REFERENCE_H_

#include <variant>

#include "tiller/plant.hpp"
#include "tiller/types.hpp"

namespace tiller {

// Every reference type carries analytic derivatives through 4th order; the
// controller consumes them directly, so there is deliberately no adapter
// for numerically differentiated signals.

// Smooth heading change psi_d(t) = target/2 * (1 + tanh((t - center)/width)).
struct TanhReference {
  double target_change = 10.0;  // final heading change [deg]
  double center_time = 8.0;     // [s]
  double width = 4.0;           // [s], > 0

  // Shipped parameterization: center = 5 + 0.3*target, width = 2.5 + 0.15*target.
  static TanhReference for_change(double target_change);
};

// Constant course-keeping target; all derivatives are zero.
struct ConstantReference {
  double heading = 0.0;  // [deg]
};

// Sinusoid psi_d(t) = amplitude * sin(angular_rate * t + phase), mainly for
// exercising the feasibility checker with deliberately hard targets.
struct SineReference {
  double amplitude = 1.0;     // [deg]
  double angular_rate = 1.0;  // [rad/s]
  double phase = 0.0;         // [rad]
};

using Reference = std::variant<TanhReference, ConstantReference, SineReference>;

// Throws std::invalid_argument naming the offending field.
void validate(const Reference& ref);

ReferenceSample sample(const Reference& ref, double t);

ConstantReference constant_reference(double heading);

// Result of checking a reference against the necessary exact-tracking
// conditions. Margins are limit minus the worst required rudder
// angle/rate over the sampled horizon; negative means violated.
struct FeasibilityReport {
  bool magnitude_ok = false;
  bool rate_ok = false;
  double worst_margin_magnitude = 0.0;  // [deg]
  double worst_margin_rate = 0.0;       // [deg/s]
  double worst_time_magnitude = 0.0;    // [s]
  double worst_time_rate = 0.0;         // [s]

  bool ok() const { return magnitude_ok && rate_ok; }
};

// Grid evaluation of the necessary conditions with r_d = dpsi_d:
//   |(d2psi_d - f(r_d))/b|                 <= max_angle
//   |(d3psi_d - df/dr(r_d)*d2psi_d)/b|     <= max_rate
// These are necessary, not sufficient: a passing report does not rule out
// guard trips near the boundaries.
FeasibilityReport check_feasibility(const Reference& ref,
                                    const PlantModel& model,
                                    const ConstraintLimits& limits,
                                    double horizon, double sample_dt);

}  // namespace tiller

#endif  // TILLER_REFERENCE_H_
