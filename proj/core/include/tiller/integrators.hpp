// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef TILLER_INTEGRATORS_H_
#define TILLER_INTEGRATORS_H_

#include <cmath>

#include "tiller/rng.hpp"
#include "tiller/types.hpp"

namespace tiller {

// Fixed-step explicit Euler: x + dt*rhs(x). State needs operator+ and
// scalar operator*; rhs is evaluated once at the current state.
template <typename State, typename Rhs>
State euler_step(const State& state, double dt, Rhs&& rhs) {
  return state + dt * rhs(state);
}

// Euler-Maruyama step for the yaw SDE: the deterministic Euler update plus
// an additive increment sigma*sqrt(dt)*N(0,1) on the r channel only.
// Exactly one draw is consumed per step; sigma = 0 reproduces euler_step.
template <typename Rhs>
FullState euler_maruyama_step(const FullState& state, double dt, Rhs&& rhs,
                              double sigma, GaussianStream& rng) {
  FullState next = euler_step(state, dt, rhs);
  next.r += sigma * std::sqrt(dt) * rng.next();
  return next;
}

}  // namespace tiller

#endif  // TILLER_INTEGRATORS_H_
