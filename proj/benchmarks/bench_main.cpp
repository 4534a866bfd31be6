// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include <benchmark/benchmark.h>

#include "tiller/controller.hpp"
#include "tiller/integrators.hpp"
#include "tiller/simulation.hpp"

namespace {

using namespace tiller;

const PlantModel kModel = PlantModel::esso_osaka();
const AuxCascade kAux(ConstraintLimits{35.0, 20.0}, CascadeGains{1.0, 1.0});
const BacksteppingGains kGains;

ReferenceSample mid_maneuver_sample() {
  TanhReference ref = TanhReference::for_change(30.0);
  ref.center_time = 19.6;
  return sample(Reference{ref}, 18.0);
}

void BM_EvalDynamics(benchmark::State& state) {
  double r = 1.3, delta = 7.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_dynamics(kModel, r, delta));
    r += 1e-9;
  }
}
BENCHMARK(BM_EvalDynamics);

void BM_CascadeRhs(benchmark::State& state) {
  const FullState s{5.0, 1.2, 8.0, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kAux.rhs(kModel, s, 3.0));
  }
}
BENCHMARK(BM_CascadeRhs);

void BM_ProposedControl(benchmark::State& state) {
  const FullState s{5.0, 1.2, 8.0, 0.2};
  const ReferenceSample ref = mid_maneuver_sample();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        proposed_control(kModel, kAux, kGains, s, ref));
  }
}
BENCHMARK(BM_ProposedControl);

void BM_ClosedLoopStep(benchmark::State& state) {
  const ReferenceSample ref = mid_maneuver_sample();
  FullState s{5.0, 1.2, 8.0, 0.2};
  for (auto _ : state) {
    const double eta = proposed_control(kModel, kAux, kGains, s, ref);
    const FullState next = euler_step(
        s, 0.01, [&](const FullState& x) { return kAux.rhs(kModel, x, eta); });
    benchmark::DoNotOptimize(next);
  }
}
BENCHMARK(BM_ClosedLoopStep);

void BM_Case1FullRun(benchmark::State& state) {
  ScenarioConfig config;
  config.model = kModel;
  TanhReference ref = TanhReference::for_change(30.0);
  ref.center_time = 19.6;
  config.reference = ref;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scenario(config));
  }
}
BENCHMARK(BM_Case1FullRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
