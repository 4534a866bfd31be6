// Copyright 2026 The Tiller Project Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "tiller/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace tiller {

TanhReference TanhReference::for_change(double target_change) {
  TanhReference ref;
  ref.target_change = target_change;
  ref.center_time = 5.0 + 0.3 * target_change;
  ref.width = 2.5 + 0.15 * target_change;
  return ref;
}

void validate(const Reference& ref) {
  if (const auto* tanh_ref = std::get_if<TanhReference>(&ref)) {
    if (!(tanh_ref->width > 0.0)) {
      throw std::invalid_argument("reference.width: must be > 0");
    }
    if (!std::isfinite(tanh_ref->target_change) ||
        !std::isfinite(tanh_ref->center_time)) {
      throw std::invalid_argument("reference: parameters must be finite");
    }
  } else if (const auto* sine = std::get_if<SineReference>(&ref)) {
    if (!std::isfinite(sine->amplitude) || !std::isfinite(sine->angular_rate) ||
        !std::isfinite(sine->phase)) {
      throw std::invalid_argument("reference: parameters must be finite");
    }
  } else if (const auto* constant = std::get_if<ConstantReference>(&ref)) {
    if (!std::isfinite(constant->heading)) {
      throw std::invalid_argument("reference.heading: must be finite");
    }
  }
}

namespace {

ReferenceSample sample_tanh(const TanhReference& ref, double t) {
  const double d = ref.width;
  const double s = std::tanh((t - ref.center_time) / d);
  const double sech2 = 1.0 - s * s;
  const double half = 0.5 * ref.target_change;

  // d^n/dt^n tanh(u) is a polynomial in s times sech^2, divided by d^n;
  // the polynomials follow from p_{n+1} = p_n'(s) * (1 - s^2).
  ReferenceSample out;
  out.psi_d = half * (1.0 + s);
  out.dpsi_d = half * sech2 / d;
  out.d2psi_d = half * (-2.0 * s) * sech2 / (d * d);
  out.d3psi_d = half * (-2.0 + 6.0 * s * s) * sech2 / (d * d * d);
  out.d4psi_d = half * (16.0 * s - 24.0 * s * s * s) * sech2 / (d * d * d * d);
  return out;
}

ReferenceSample sample_sine(const SineReference& ref, double t) {
  const double w = ref.angular_rate;
  const double arg = w * t + ref.phase;
  const double sin_a = std::sin(arg);
  const double cos_a = std::cos(arg);
  ReferenceSample out;
  out.psi_d = ref.amplitude * sin_a;
  out.dpsi_d = ref.amplitude * w * cos_a;
  out.d2psi_d = -ref.amplitude * w * w * sin_a;
  out.d3psi_d = -ref.amplitude * w * w * w * cos_a;
  out.d4psi_d = ref.amplitude * w * w * w * w * sin_a;
  return out;
}

}  // namespace

ReferenceSample sample(const Reference& ref, double t) {
  return std::visit(
      [t](const auto& r) -> ReferenceSample {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, TanhReference>) {
          return sample_tanh(r, t);
        } else if constexpr (std::is_same_v<T, SineReference>) {
          return sample_sine(r, t);
        } else {
          return ReferenceSample{r.heading, 0.0, 0.0, 0.0, 0.0};
        }
      },
      ref);
}

ConstantReference constant_reference(double heading) {
  return ConstantReference{heading};
}

FeasibilityReport check_feasibility(const Reference& ref,
                                    const PlantModel& model,
                                    const ConstraintLimits& limits,
                                    double horizon, double sample_dt) {
  if (!(horizon > 0.0)) {
    throw std::invalid_argument("feasibility: horizon must be > 0");
  }
  if (!(sample_dt > 0.0)) {
    throw std::invalid_argument("feasibility: sample_dt must be > 0");
  }
  model.validate();
  validate(ref);

  const double b = model.gain();
  const long steps = std::lround(horizon / sample_dt);

  FeasibilityReport report;
  report.worst_margin_magnitude = limits.max_angle;
  report.worst_margin_rate = limits.max_rate;

  for (long k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * sample_dt;
    const ReferenceSample rs = sample(ref, t);
    const double r_d = rs.dpsi_d;
    const double required_angle = (rs.d2psi_d - eval_f(model, r_d)) / b;
    const double required_rate =
        (rs.d3psi_d - eval_df(model, r_d) * rs.d2psi_d) / b;

    const double margin_angle = limits.max_angle - std::abs(required_angle);
    if (margin_angle < report.worst_margin_magnitude) {
      report.worst_margin_magnitude = margin_angle;
      report.worst_time_magnitude = t;
    }
    const double margin_rate = limits.max_rate - std::abs(required_rate);
    if (margin_rate < report.worst_margin_rate) {
      report.worst_margin_rate = margin_rate;
      report.worst_time_rate = t;
    }
  }

  report.magnitude_ok = report.worst_margin_magnitude >= 0.0;
  report.rate_ok = report.worst_margin_rate >= 0.0;
  return report;
}

}  // namespace tiller
