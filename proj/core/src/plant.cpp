// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "tiller/plant.hpp"

#include <cmath>
#include <stdexcept>

namespace tiller {

void PlantModel::validate() const {
  if (!(T != 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("model.T: must be nonzero and finite");
  }
  if (!(K != 0.0) || !std::isfinite(K)) {
    throw std::invalid_argument("model.K: must be nonzero and finite");
  }
  for (double n : {n0, n1, n2, n3}) {
    if (!std::isfinite(n)) {
      throw std::invalid_argument("model.n0..n3: must be finite");
    }
  }
}

PlantModel PlantModel::nomoto(double K, double T) {
  PlantModel m;
  m.kind = PlantKind::kNomoto;
  m.K = K;
  m.T = T;
  return m;
}

PlantModel PlantModel::norrbin(double K, double T, double n0, double n1,
                               double n2, double n3) {
  PlantModel m;
  m.kind = PlantKind::kNorrbin;
  m.K = K;
  m.T = T;
  m.n0 = n0;
  m.n1 = n1;
  m.n2 = n2;
  m.n3 = n3;
  return m;
}

PlantModel PlantModel::esso_osaka() {
  return norrbin(0.21, 8.8, 0.0, 0.41, 0.0, 0.23);
}

const char* to_string(PlantKind kind) {
  switch (kind) {
    case PlantKind::kNomoto:
      return "nomoto";
    case PlantKind::kNorrbin:
      return "norrbin";
    case PlantKind::kCustomPolynomial:
      return "custom-polynomial";
  }
  return "unknown";
}

double eval_f(const PlantModel& model, double r) {
  if (model.kind == PlantKind::kNomoto) {
    return -r / model.T;
  }
  const double h = ((model.n3 * r + model.n2) * r + model.n1) * r + model.n0;
  return -h / model.T;
}

double eval_df(const PlantModel& model, double r) {
  if (model.kind == PlantKind::kNomoto) {
    return -1.0 / model.T;
  }
  return -((3.0 * model.n3 * r + 2.0 * model.n2) * r + model.n1) / model.T;
}

double eval_d2f(const PlantModel& model, double r) {
  if (model.kind == PlantKind::kNomoto) {
    return 0.0;
  }
  return -(6.0 * model.n3 * r + 2.0 * model.n2) / model.T;
}

double eval_dynamics(const PlantModel& model, double r, double delta) {
  return eval_f(model, r) + model.gain() * delta;
}

}  // namespace tiller
