// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_PLANT_H_
#define TILLER_PLANT_H_

#include <string>

#include "tiller/types.hpp"

namespace tiller {

enum class PlantKind {
  kNomoto,            // first-order linear yaw response: T*rdot + r = K*delta
  kNorrbin,           // cubic nonlinear extension: T*rdot + H(r) = K*delta
  kCustomPolynomial,  // same polynomial form, arbitrary coefficients
};

// SISO yaw-response model rdot = f(r) + b*delta with b = K/T and
// f(r) = -H(r)/T, H(r) = n3*r^3 + n2*r^2 + n1*r + n0 (H(r) = r for Nomoto).
struct PlantModel {
  PlantKind kind = PlantKind::kNomoto;
  double K = 0.0;  // rudder gain [1/s]
  double T = 1.0;  // time constant [s]
  double n0 = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double n3 = 0.0;

  // b is always derived from K and T so the two can never disagree.
  double gain() const { return K / T; }

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  static PlantModel nomoto(double K, double T);
  static PlantModel norrbin(double K, double T, double n0, double n1,
                            double n2, double n3);

  // Identified coefficients of the M.V. Esso Osaka model ship used by the
  // shipped presets (K=0.21, T=8.8, H(r) = 0.23 r^3 + 0.41 r).
  static PlantModel esso_osaka();
};

const char* to_string(PlantKind kind);

// f(r) [deg/s^2]; total over all finite r.
double eval_f(const PlantModel& model, double r);

// df/dr(r) [1/s].
double eval_df(const PlantModel& model, double r);

// d^2f/dr^2(r) [1/(deg*s)].
double eval_d2f(const PlantModel& model, double r);

// rdot = f(r) + b*delta [deg/s^2].
double eval_dynamics(const PlantModel& model, double r, double delta);

}  // namespace tiller

#endif  // TILLER_PLANT_H_
