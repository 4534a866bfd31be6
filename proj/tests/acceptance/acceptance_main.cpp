// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits with the number of failed criteria. Run a single
// criterion with --criterion N (useful under ctest).

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tiller/commands.hpp"
#include "tiller/controller.hpp"
#include "tiller/integrators.hpp"
#include "tiller/rng.hpp"
#include "tiller/scenario_config.hpp"
#include "tiller/simulation.hpp"

namespace {

using namespace tiller;

std::string g_preset_dir = "presets";

ScenarioConfig load_preset(const std::string& name) {
  return load_scenario_config(g_preset_dir + "/" + name + ".json");
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// helpers

struct Case1Run {
  double target = 0.0;
  Trajectory trajectory;
  double seconds = 0.0;
  double max_abs_delta = 0.0;
  double max_abs_rate = 0.0;
};

std::vector<Case1Run>& case1_runs() {
  static std::vector<Case1Run> runs = [] {
    std::vector<Case1Run> out;
    for (double target : {10.0, 20.0, 30.0, 40.0, 50.0}) {
      Case1Run run;
      run.target = target;
      std::ostringstream name;
      name << "case1_psi" << static_cast<int>(target);
      const ScenarioConfig config = load_preset(name.str());
      const auto start = std::chrono::steady_clock::now();
      run.trajectory = run_scenario(config);
      run.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      for (const TelemetryRecord& rec : run.trajectory.records) {
        run.max_abs_delta = std::max(run.max_abs_delta,
                                     std::abs(rec.state.delta));
        run.max_abs_rate = std::max(run.max_abs_rate, std::abs(rec.delta_dot));
      }
      out.push_back(std::move(run));
    }
    return out;
  }();
  return runs;
}

double slope_of_log_v(const Trajectory& traj, double v_lo, double v_hi,
                      long* samples) {
  double sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0;
  long n = 0;
  for (const TelemetryRecord& rec : traj.records) {
    if (rec.lyapunov < v_lo || rec.lyapunov > v_hi) continue;
    const double y = std::log(rec.lyapunov);
    sum_t += rec.t;
    sum_y += y;
    sum_tt += rec.t * rec.t;
    sum_ty += rec.t * y;
    ++n;
  }
  if (samples) *samples = n;
  const double denom = n * sum_tt - sum_t * sum_t;
  return denom > 0.0 ? (n * sum_ty - sum_t * sum_y) / denom : 0.0;
}

// ---------------------------------------------------------------------------
// criteria

// Criterion 1: all five target changes run to completion in under a second
// each, with the rudder angle and rate strictly inside the limits at every
// logged step.
Outcome criterion1() {
  Outcome out;
  out.pass = true;
  std::ostringstream detail;
  for (const Case1Run& run : case1_runs()) {
    const bool ok = run.trajectory.completed() && run.max_abs_delta < 35.0 &&
                    run.max_abs_rate < 20.0 && run.seconds < 1.0;
    out.pass = out.pass && ok;
    detail << " [" << run.target << ": " << to_string(run.trajectory.status)
           << " max|delta|=" << run.max_abs_delta
           << " max|rate|=" << run.max_abs_rate << " " << run.seconds * 1e3
           << "ms]";
  }
  out.detail = detail.str();
  return out;
}

// Criterion 2: final heading within 0.1 deg of the commanded change.
Outcome criterion2() {
  Outcome out;
  out.pass = true;
  std::ostringstream detail;
  for (const Case1Run& run : case1_runs()) {
    if (!run.trajectory.completed() || run.trajectory.records.empty()) {
      out.pass = false;
      detail << " [" << run.target << ": no complete run]";
      continue;
    }
    const double final_psi = run.trajectory.records.back().state.psi;
    const double err = std::abs(final_psi - run.target);
    out.pass = out.pass && err < 0.1;
    detail << " [" << run.target << ": |err|=" << err << "]";
  }
  out.detail = detail.str();
  return out;
}

// Criterion 3: with unit gains, log V decays with slope -2 within 5% over
// the window V in [1e-10, V(0)/10], and V never increases by more than
// 1e-6*V per step while above 1e-10. Evaluated on a pure relaxation
// (constant reference, initial heading offset) where the decay is the only
// signal; the maneuvering runs floor V at the integration-noise level long
// before 1e-10.
Outcome criterion3() {
  ScenarioConfig config;
  config.name = "relaxation";
  config.model = PlantModel::esso_osaka();
  config.reference = ConstantReference{0.0};
  config.initial.psi = 0.3;
  const Trajectory traj = run_scenario(config);

  Outcome out;
  if (!traj.completed()) {
    out.detail = "relaxation run did not complete";
    return out;
  }
  const double v0 = traj.records.front().lyapunov;
  long n = 0;
  const double slope = slope_of_log_v(traj, 1e-10, v0 / 10.0, &n);

  long violations = 0;
  for (std::size_t k = 0; k + 1 < traj.records.size(); ++k) {
    const double v = traj.records[k].lyapunov;
    if (v < 1e-10) continue;
    if (traj.records[k + 1].lyapunov - v > 1e-6 * v) ++violations;
  }

  out.pass = std::abs(slope + 2.0) <= 0.1 && violations == 0;
  std::ostringstream detail;
  detail << " slope=" << slope << " over " << n << " samples, "
         << violations << " monotonicity violations, V(0)=" << v0;
  out.detail = detail.str();
  return out;
}

// Criterion 4: finite-difference derivative of the logged error vector
// matches (-C + S) z. The mismatch is measured relative to the run's
// peak error-dynamics magnitude, since z itself decays to the integration
// noise floor within the run.
Outcome criterion4() {
  const ScenarioConfig config = load_preset("case1_psi30");
  const Trajectory traj = run_scenario(config);

  Outcome out;
  if (!traj.completed()) {
    out.detail = "case1_psi30 did not complete";
    return out;
  }
  const double dt = config.dt;
  const auto apply = [](const ErrorVector& z) {
    return ErrorVector{-z.z1 + z.z2, -z.z1 - z.z2 + z.z3, -z.z2 - z.z3 + z.z4,
                       -z.z3 - z.z4};
  };
  const auto norm = [](const ErrorVector& z) {
    return std::sqrt(z.z1 * z.z1 + z.z2 * z.z2 + z.z3 * z.z3 + z.z4 * z.z4);
  };
  double peak = 0.0;
  for (const TelemetryRecord& rec : traj.records) {
    peak = std::max(peak, norm(apply(rec.z)));
  }
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < traj.records.size(); ++k) {
    const ErrorVector& z = traj.records[k].z;
    const ErrorVector& zn = traj.records[k + 1].z;
    const ErrorVector az = apply(z);
    const ErrorVector fd{(zn.z1 - z.z1) / dt, (zn.z2 - z.z2) / dt,
                         (zn.z3 - z.z3) / dt, (zn.z4 - z.z4) / dt};
    const ErrorVector diff{fd.z1 - az.z1, fd.z2 - az.z2, fd.z3 - az.z3,
                           fd.z4 - az.z4};
    worst = std::max(worst, norm(diff));
  }
  const double rel = worst / peak;
  out.pass = rel <= 5.0 * dt;
  std::ostringstream detail;
  detail << " max||dz/dt - (-C+S)z|| / peak||(-C+S)z|| = " << rel
         << " (tolerance " << 5.0 * dt << ")";
  out.detail = detail.str();
  return out;
}

// Criterion 5: on 1000 random admissible states and references, plugging
// the control into the explicit z4-derivative expression returns
// -c4 z4 - z3 to 1e-9 relative, and the compact and fully expanded forms of
// the law agree to the same tolerance.
Outcome criterion5() {
  const PlantModel model = PlantModel::esso_osaka();
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> gain(0.5, 2.0);

  double worst_cancel = 0.0, worst_forms = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const AuxCascade aux(ConstraintLimits{35.0, 20.0},
                         CascadeGains{gain(rng), gain(rng)});
    const BacksteppingGains gains{gain(rng), gain(rng), gain(rng), gain(rng)};
    FullState s;
    s.psi = 60.0 * u(rng);
    s.r = 3.0 * u(rng);
    s.delta = 0.95 * 35.0 * u(rng);
    s.xi = 0.95 * aux.xi_bound(s.delta) * u(rng);
    ReferenceSample ref;
    ref.psi_d = 60.0 * u(rng);
    ref.dpsi_d = 3.0 * u(rng);
    ref.d2psi_d = u(rng);
    ref.d3psi_d = 0.5 * u(rng);
    ref.d4psi_d = 0.5 * u(rng);

    const ErrorVector z = error_vector(model, aux, gains, s, ref);
    const double eta = proposed_control(model, aux, gains, s, ref);

    // Explicit z4-derivative expression, term by term.
    const double b = model.gain();
    const double f = eval_f(model, s.r);
    const double df = eval_df(model, s.r);
    const double d2f = eval_d2f(model, s.r);
    const double gd = aux.g_delta(s.delta);
    const double dgd = aux.dg_delta(s.delta);
    const double fxi = aux.f_xi(s.delta, s.xi);
    const double gxi = aux.g_xi(s.delta, s.xi);
    const double v = s.r - ref.dpsi_d;
    const double rdot = f + b * s.delta;
    const double acc = rdot - ref.d2psi_d;
    const double c1 = gains.c1, c2 = gains.c2, c3 = gains.c3, c4 = gains.c4;
    const double terms[] = {
        (c1 + c3 + c1 * c2 * c3) * v,
        (c1 * c2 + c2 * c3 + c3 * c1 + 2.0) * acc,
        (c1 + c2 + c3) * (df * rdot + b * gd * s.xi - ref.d3psi_d),
        d2f * rdot * rdot,
        df * (df * rdot + b * gd * s.xi),
        b * (dgd * gd * s.xi * s.xi + gd * (fxi + gxi * eta)),
        -ref.d4psi_d};
    double zdot4 = 0.0, scale = 1.0;
    for (double t : terms) {
      zdot4 += t;
      scale = std::max(scale, std::abs(t));
    }
    const double target = -c4 * z.z4 - z.z3;
    worst_cancel = std::max(worst_cancel,
                            std::abs(zdot4 - target) /
                                std::max(std::abs(target), scale));

    // Fully expanded coefficient form of the same law.
    const double jerk = df * rdot + b * gd * s.xi - ref.d3psi_d;
    const double expanded =
        (-(c1 * c2 + c3 * c4 + c4 * c1 + c1 * c2 * c3 * c4 + 1.0) *
             (s.psi - ref.psi_d) -
         (2.0 * c1 + c2 + c3 + 2.0 * c4 + c1 * c2 * c3 + c4 * c1 * c2 +
          c3 * c4 * c1 + c2 * c3 * c4) *
             v -
         (c1 * c2 + c1 * c3 + c1 * c4 + c2 * c3 + c2 * c4 + c3 * c4 + 3.0) *
             acc -
         (c1 + c2 + c3 + c4) * jerk -
         (d2f * rdot * rdot + df * (df * rdot + b * gd * s.xi) +
          b * (dgd * gd * s.xi * s.xi + gd * fxi) - ref.d4psi_d)) /
        (b * gd * gxi);
    worst_forms = std::max(worst_forms,
                           std::abs(eta - expanded) /
                               std::max({std::abs(eta), std::abs(expanded),
                                         1e-9}));
  }

  Outcome out;
  out.pass = worst_cancel <= 1e-9 && worst_forms <= 1e-9;
  std::ostringstream detail;
  detail << " worst cancellation residual " << worst_cancel
         << ", worst compact/expanded mismatch " << worst_forms;
  out.detail = detail.str();
  return out;
}

// Criterion 6: course keeping for 100 s under additive yaw-rate noise of
// intensity 0.835 (the full-rudder acceleration), fixed seed, without
// violating either constraint, ending with mean |psi| below 5 deg over the
// final 50 s.
Outcome criterion6() {
  const ScenarioConfig config = load_preset("case2");
  const Trajectory traj = run_scenario(config);

  bool bounds_ok = true;
  double tail = 0.0;
  long tail_n = 0;
  for (const TelemetryRecord& rec : traj.records) {
    bounds_ok = bounds_ok && std::abs(rec.state.delta) < 35.0 &&
                std::abs(rec.delta_dot) < 20.0;
    if (rec.t >= 50.0) {
      tail += std::abs(rec.state.psi);
      ++tail_n;
    }
  }
  const double mean_tail = tail_n > 0 ? tail / tail_n : 0.0;

  Outcome out;
  out.pass = traj.completed() && bounds_ok && tail_n > 0 && mean_tail < 5.0;
  std::ostringstream detail;
  detail << " status=" << to_string(traj.status);
  if (!traj.completed()) {
    detail << " at t=" << traj.failure_time << "s (" << traj.failure_reason
           << ")";
  }
  if (tail_n > 0) {
    detail << ", mean|psi| over final 50 s = " << mean_tail;
  }
  out.detail = detail.str();
  return out;
}

// Criterion 7: under saturation wrappers, the conventional law on a 50 deg
// step reference sustains an oscillation (>= 3 heading-error sign changes
// in the final 50 s), while the constrained-cascade law on the feasible
// 50 deg maneuver is quiet after settling.
Outcome criterion7() {
  const Trajectory degraded = run_scenario(load_preset("degradation"));
  const int changes = count_sign_changes(degraded, 50.0, 100.0, 0.1);

  const Trajectory proposed = run_scenario(load_preset("case1_psi50"));
  const Metrics metrics = compute_metrics(proposed);
  const int quiet = metrics.settled
                        ? count_sign_changes(proposed, metrics.settling_time,
                                             100.0, 0.1)
                        : -1;

  Outcome out;
  out.pass = degraded.completed() && changes >= 3 && proposed.completed() &&
             metrics.settled && quiet == 0;
  std::ostringstream detail;
  detail << " conventional: " << changes
         << " sign changes in final 50 s; proposed: "
         << (metrics.settled ? std::to_string(quiet)
                             : std::string("never settled"))
         << " after settling at t=" << metrics.settling_time;
  out.detail = detail.str();
  return out;
}

// Criterion 8: order-1 convergence of the integrator (halving dt halves the
// endpoint error against a dt=1e-4 reference), and the realized quadratic
// variation of the driftless noise walk matches sigma^2*T within 10%.
Outcome criterion8() {
  ScenarioConfig config = load_preset("case1_psi10");
  config.horizon = 50.0;

  const auto endpoint = [&](double dt) {
    ScenarioConfig c = config;
    c.dt = dt;
    const Trajectory traj = run_scenario(c);
    return traj.completed() ? traj.records.back().state.psi
                            : std::numeric_limits<double>::quiet_NaN();
  };
  const double fine = endpoint(1e-4);
  const double e1 = std::abs(endpoint(0.01) - fine);
  const double e2 = std::abs(endpoint(0.005) - fine);
  const double ratio = e1 / e2;
  const bool euler_ok = std::isfinite(ratio) && ratio >= 1.6 && ratio <= 2.4;

  const double sigma = 0.835, dt = 0.01;
  GaussianStream rng(0);
  const auto rhs = [](const FullState&) { return FullState{}; };
  FullState s;
  double qv = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const FullState next = euler_maruyama_step(s, dt, rhs, sigma, rng);
    qv += (next.r - s.r) * (next.r - s.r);
    s = next;
  }
  const double qv_rel = qv / (sigma * sigma * 100.0) - 1.0;
  const bool noise_ok = std::abs(qv_rel) <= 0.10;

  Outcome out;
  out.pass = euler_ok && noise_ok;
  std::ostringstream detail;
  detail << " error ratio dt=0.01/dt=0.005: " << ratio << " (e1=" << e1
         << ", e2=" << e2 << "); quadratic variation off by "
         << qv_rel * 100.0 << "%";
  out.detail = detail.str();
  return out;
}

// Criterion 9: analytic derivatives of the plant and of every reference
// order match central finite differences at 1e-5 relative across their
// domains.
Outcome criterion9() {
  const PlantModel model = PlantModel::esso_osaka();
  const double h = 1e-4;
  double worst = 0.0;

  double scale_f = 0.0, scale_df = 0.0;
  for (double r = -10.0; r <= 10.0; r += 0.1) {
    scale_f = std::max(scale_f, std::abs(eval_f(model, r)));
    scale_df = std::max(scale_df, std::abs(eval_df(model, r)));
  }
  for (double r = -10.0; r <= 10.0; r += 0.1) {
    const double fd1 =
        (eval_f(model, r + h) - eval_f(model, r - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd1 - eval_df(model, r)) /
                                std::max(std::abs(eval_df(model, r)),
                                         1e-6 * scale_f));
    const double fd2 =
        (eval_df(model, r + h) - eval_df(model, r - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd2 - eval_d2f(model, r)) /
                                std::max(std::abs(eval_d2f(model, r)),
                                         1e-6 * scale_df));
  }

  for (double target : {10.0, 50.0}) {
    const Reference ref{TanhReference::for_change(target)};
    double scale[5] = {0, 0, 0, 0, 0};
    for (double t = 0.0; t <= 60.0; t += 0.25) {
      const ReferenceSample s = sample(ref, t);
      const double v[5] = {s.psi_d, s.dpsi_d, s.d2psi_d, s.d3psi_d, s.d4psi_d};
      for (int i = 0; i < 5; ++i) scale[i] = std::max(scale[i], std::abs(v[i]));
    }
    for (double t = 0.0; t <= 60.0; t += 0.25) {
      const auto value = [&](int order, double x) {
        const ReferenceSample s = sample(ref, x);
        const double v[5] = {s.psi_d, s.dpsi_d, s.d2psi_d, s.d3psi_d,
                             s.d4psi_d};
        return v[order];
      };
      for (int order = 1; order <= 4; ++order) {
        const double fd =
            (value(order - 1, t + h) - value(order - 1, t - h)) / (2.0 * h);
        const double analytic = value(order, t);
        worst = std::max(worst, std::abs(fd - analytic) /
                                    std::max(std::abs(analytic),
                                             1e-6 * scale[order]));
      }
    }
  }

  Outcome out;
  out.pass = worst <= 1e-5;
  std::ostringstream detail;
  detail << " worst relative mismatch " << worst;
  out.detail = detail.str();
  return out;
}

// Criterion 10: byte-identical telemetry across repeated runs of the same
// config and seed.
Outcome criterion10() {
  namespace fs = std::filesystem;
  const fs::path base =
      fs::temp_directory_path() /
      ("tiller_acceptance_" + std::to_string(std::random_device{}()));
  fs::create_directories(base);

  std::ostringstream sink;
  const std::string preset = g_preset_dir + "/case1_psi10.json";
  const int rc1 = cmd_run(preset, (base / "a").string(), {}, sink, sink);
  const int rc2 = cmd_run(preset, (base / "b").string(), {}, sink, sink);

  const auto digest = [](const fs::path& p) -> std::uint64_t {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string s = buf.str();
    return fnv1a64(s.data(), s.size());
  };
  const std::uint64_t da = digest(base / "a" / "telemetry.csv");
  const std::uint64_t db = digest(base / "b" / "telemetry.csv");

  std::error_code ec;
  fs::remove_all(base, ec);

  Outcome out;
  out.pass = rc1 == 0 && rc2 == 0 && da == db;
  std::ostringstream detail;
  detail << " digests " << std::hex << da << " vs " << db;
  out.detail = detail.str();
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "constraint invariance over the five maneuvers", criterion1},
      {2, "final-heading tracking within 0.1 deg", criterion2},
      {3, "exponential decay of V at rate 2", criterion3},
      {4, "logged error dynamics match (-C+S)z", criterion4},
      {5, "exact cancellation of the z4 dynamics", criterion5},
      {6, "course keeping under full-authority noise", criterion6},
      {7, "saturated baseline oscillates, proposed loop is quiet",
       criterion7},
      {8, "integrator convergence and noise scaling", criterion8},
      {9, "analytic derivatives match finite differences", criterion9},
      {10, "bitwise deterministic runs", criterion10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--presets" && i + 1 < argc) {
      g_preset_dir = argv[++i];
    } else if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0]
                << " [--presets DIR] [--criterion N]\n";
      return 64;
    }
  }

  int failures = 0;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string(" exception: ") + e.what();
    }
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << c.id << ". "
              << c.title << ":" << outcome.detail << "\n";
    if (!outcome.pass) ++failures;
  }
  return failures;
}
