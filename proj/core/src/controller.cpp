// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "tiller/controller.hpp"

#include <cmath>

namespace tiller {

namespace {

// Shared subexpressions of the error coordinates and the control law.
struct ErrorTerms {
  double e_psi;       // psi - psi_d
  double e_r;         // r - dpsi_d
  double rdot;        // f(r) + b*delta
  double e_acc;       // f(r) + b*delta - d2psi_d
  double df;          // df/dr at r
  double d2f;         // d2f/dr2 at r
  double b;           // K/T
};

ErrorTerms make_terms(const PlantModel& model, double psi, double r,
                      double delta, const ReferenceSample& ref) {
  ErrorTerms t;
  t.e_psi = psi - ref.psi_d;
  t.e_r = r - ref.dpsi_d;
  t.b = model.gain();
  t.rdot = eval_f(model, r) + t.b * delta;
  t.e_acc = t.rdot - ref.d2psi_d;
  t.df = eval_df(model, r);
  t.d2f = eval_d2f(model, r);
  return t;
}

ErrorVector make_error_vector(const ErrorTerms& t,
                              const BacksteppingGains& g, double b_delta_dot,
                              const ReferenceSample& ref) {
  const double c1 = g.c1, c2 = g.c2, c3 = g.c3;
  ErrorVector z;
  z.z1 = t.e_psi;
  z.z2 = c1 * z.z1 + t.e_r;
  z.z3 = (c1 * c2 + 1.0) * t.e_psi + (c1 + c2) * t.e_r + t.e_acc;
  z.z4 = (c1 + c3 + c1 * c2 * c3) * t.e_psi +
         (c1 * c2 + c2 * c3 + c3 * c1 + 2.0) * t.e_r +
         (c1 + c2 + c3) * t.e_acc + t.df * t.rdot + b_delta_dot - ref.d3psi_d;
  return z;
}

}  // namespace

ErrorVector error_vector_from_rate(const PlantModel& model,
                                   const BacksteppingGains& gains, double psi,
                                   double r, double delta, double delta_dot,
                                   const ReferenceSample& ref) {
  const ErrorTerms t = make_terms(model, psi, r, delta, ref);
  return make_error_vector(t, gains, t.b * delta_dot, ref);
}

ErrorVector error_vector(const PlantModel& model, const AuxCascade& aux,
                         const BacksteppingGains& gains,
                         const FullState& state, const ReferenceSample& ref) {
  aux.check(state.delta, state.xi);
  const double delta_dot = aux.g_delta(state.delta) * state.xi;
  return error_vector_from_rate(model, gains, state.psi, state.r, state.delta,
                                delta_dot, ref);
}

double proposed_control(const PlantModel& model, const AuxCascade& aux,
                        const BacksteppingGains& gains, const FullState& state,
                        const ReferenceSample& ref, double output_cap) {
  aux.check(state.delta, state.xi);

  const double c1 = gains.c1, c2 = gains.c2, c3 = gains.c3, c4 = gains.c4;
  const ErrorTerms t = make_terms(model, state.psi, state.r, state.delta, ref);

  const double gd = aux.g_delta(state.delta);
  const double dgd = aux.dg_delta(state.delta);
  const double fxi = aux.f_xi(state.delta, state.xi);
  const double gxi = aux.g_xi(state.delta, state.xi);

  const double b_gd_xi = t.b * gd * state.xi;
  const ErrorVector z = make_error_vector(t, gains, b_gd_xi, ref);

  // Everything in z4's derivative except the input channel b*gd*gxi*eta.
  const double jerk = t.df * t.rdot + b_gd_xi - ref.d3psi_d;
  const double drift =
      (c1 + c3 + c1 * c2 * c3) * t.e_r +
      (c1 * c2 + c2 * c3 + c3 * c1 + 2.0) * t.e_acc +
      (c1 + c2 + c3) * jerk + t.d2f * t.rdot * t.rdot +
      t.df * (t.df * t.rdot + b_gd_xi) +
      t.b * (dgd * gd * state.xi * state.xi + gd * fxi) - ref.d4psi_d;

  const double input_gain = t.b * gd * gxi;
  if (!(std::abs(1.0 / input_gain) <= output_cap)) {
    throw BoundaryViolation(BoundaryViolation::Kind::kControlCap, state.delta,
                            state.xi, output_cap);
  }
  const double eta = (-c4 * z.z4 - z.z3 - drift) / input_gain;
  if (!(std::abs(eta) <= output_cap)) {
    throw BoundaryViolation(BoundaryViolation::Kind::kControlCap, state.delta,
                            state.xi, output_cap);
  }
  return eta;
}

double conventional_control(const PlantModel& model,
                            const BacksteppingGains& gains,
                            const ShipKinematicState& state,
                            const ReferenceSample& ref) {
  const double e_psi = state.psi - ref.psi_d;
  const double v = state.r - ref.dpsi_d;
  const double e_r = gains.c1 * e_psi + v;
  const double f = eval_f(model, state.r);
  return (-gains.c2 * e_r - e_psi - (f + gains.c1 * v - ref.d2psi_d)) /
         model.gain();
}

double saturate(double value, double limit) {
  if (value > limit) return limit;
  if (value < -limit) return -limit;
  return value;
}

double rate_limit(double prev_delta, double commanded_delta, double max_rate,
                  double dt) {
  return prev_delta +
         saturate((commanded_delta - prev_delta) / dt, max_rate) * dt;
}

double lyapunov_value(const ErrorVector& z) {
  return 0.5 * (z.z1 * z.z1 + z.z2 * z.z2 + z.z3 * z.z3 + z.z4 * z.z4);
}

}  // namespace tiller
