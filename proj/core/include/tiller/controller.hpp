// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_CONTROLLER_H_
#define TILLER_CONTROLLER_H_

#include "tiller/aux_cascade.hpp"
#include "tiller/plant.hpp"
#include "tiller/types.hpp"

namespace tiller {

// Default cap on the magnitude of the cascade control output and on the
// inverse input gain 1/(b*g_delta*g_xi). Exceeding it raises
// BoundaryViolation instead of letting the loop overflow to inf/NaN.
inline constexpr double kDefaultControlCap = 1e9;

// Backstepping error coordinates from an explicit rudder rate. delta_dot is
// the realized (or structural) rudder rate; for the cascade it equals
// g_delta(delta)*xi. Works for any actuator, so the baseline controllers
// log the same coordinates.
ErrorVector error_vector_from_rate(const PlantModel& model,
                                   const BacksteppingGains& gains, double psi,
                                   double r, double delta, double delta_dot,
                                   const ReferenceSample& ref);

// Error coordinates of the constrained cascade. Guard-checked.
ErrorVector error_vector(const PlantModel& model, const AuxCascade& aux,
                         const BacksteppingGains& gains,
                         const FullState& state, const ReferenceSample& ref);

// The proposed cascade control input eta = alpha_eta(state, ref). Closing
// the loop with it gives z4' = -c4*z4 - z3 exactly, so the whole error
// vector obeys z' = (-C + S) z and V = |z|^2/2 decays exponentially.
// Throws BoundaryViolation when guards trip or the output exceeds the cap.
double proposed_control(const PlantModel& model, const AuxCascade& aux,
                        const BacksteppingGains& gains, const FullState& state,
                        const ReferenceSample& ref,
                        double output_cap = kDefaultControlCap);

// Unconstrained two-step backstepping rudder command. With the exact
// (unclipped) command the pair (e_psi, e_r) satisfies e_psi' = -c1 e_psi + e_r
// and e_r' = -c2 e_r - e_psi. Only c1 and c2 of the gains are used.
double conventional_control(const PlantModel& model,
                            const BacksteppingGains& gains,
                            const ShipKinematicState& state,
                            const ReferenceSample& ref);

// Magnitude saturation: value clipped to [-limit, limit].
double saturate(double value, double limit);

// Discrete rate limiter: moves prev_delta toward commanded_delta by at most
// max_rate*dt, i.e. delta' = sat((commanded - prev)/dt, max_rate).
double rate_limit(double prev_delta, double commanded_delta, double max_rate,
                  double dt);

// V(z) = z.z / 2.
double lyapunov_value(const ErrorVector& z);

}  // namespace tiller

#endif  // TILLER_CONTROLLER_H_
