/*!
 * Copyright 2026 by ccboost Contributors
 * \file loss.cc
 * \brief Convex loss values, Newton derivatives, saturated shift.
 */
#include "ccboost/loss.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace ccboost {

namespace {

constexpr double kHessFloor = 1e-16;
constexpr double kAftHessFloor = 1e-6;
constexpr double kAftMassEps = 1e-12;   // floor on censored probability mass
constexpr double kExpClamp = 30.0;      // score clamp inside poisson/tweedie h
constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

constexpr std::array<std::pair<LossKind, const char*>, 8> kLossNames = {{
    {LossKind::kSquared, "reg:squarederror"},
    {LossKind::kLogisticMargin, "binary:logitraw"},
    {LossKind::kHingeMargin, "binary:hinge"},
    {LossKind::kPoisson, "count:poisson"},
    {LossKind::kGammaDeviance, "reg:gamma"},
    {LossKind::kTweedie, "reg:tweedie"},
    {LossKind::kMultinomial, "multi:softprob"},
    {LossKind::kAftNormal, "survival:aft"},
}};

double sigmoid(double x) {
  if (x >= 0.0) {
    double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  double e = std::exp(x);
  return e / (1.0 + e);
}

double norm_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }
double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }
double norm_sf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

/*! \brief log(1 + exp(-m)) without overflow for any m. */
double log1p_exp_neg(double m) {
  if (m >= 0.0) return std::log1p(std::exp(-m));
  return -m + std::log1p(std::exp(m));
}

bool is_uncensored(const Label& label) { return label.t_lower == label.t_upper; }
bool is_right_censored(const Label& label) {
  return std::isinf(label.t_upper);
}

/*! \brief Golden-section minimum of a unimodal f on [lo, hi]. */
template <typename F>
double golden_min(F f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return f((a + b) / 2.0);
}

}  // namespace

const char* loss_kind_name(LossKind kind) {
  for (const auto& [k, name] : kLossNames) {
    if (k == kind) return name;
  }
  throw UsageError("unknown loss kind");
}

LossKind parse_loss_kind(const std::string& name) {
  for (const auto& [k, kname] : kLossNames) {
    if (name == kname) return k;
  }
  std::string valid;
  for (const auto& [k, kname] : kLossNames) {
    valid += valid.empty() ? kname : std::string(", ") + kname;
  }
  throw UsageError("unknown loss \"" + name + "\"; valid losses: " + valid);
}

void validate_loss_spec(const LossSpec& spec) {
  switch (spec.kind) {
    case LossKind::kMultinomial:
      if (spec.num_class < 2) {
        throw UsageError("multi:softprob: num_class must be >= 2");
      }
      break;
    case LossKind::kTweedie:
      if (!(spec.tweedie_power > 1.0 && spec.tweedie_power < 2.0)) {
        throw UsageError("reg:tweedie: tweedie_power must lie in (1, 2)");
      }
      break;
    case LossKind::kAftNormal:
      if (!(spec.aft_scale > 0.0)) {
        throw UsageError("survival:aft: aft_scale must be > 0");
      }
      break;
    default:
      break;
  }
}

void validate_label(const LossSpec& spec, const Label& label, int index) {
  auto fail = [&](const std::string& what) {
    throw DataError("observation " + std::to_string(index) + ": " + what +
                    " for loss " + loss_kind_name(spec.kind));
  };
  switch (spec.kind) {
    case LossKind::kSquared:
      if (!std::isfinite(label.y)) fail("label must be finite");
      break;
    case LossKind::kLogisticMargin:
    case LossKind::kHingeMargin:
      if (label.y != -1.0 && label.y != 1.0) fail("label must be -1 or +1");
      break;
    case LossKind::kPoisson:
    case LossKind::kTweedie:
      if (!(label.y >= 0.0) || !std::isfinite(label.y)) {
        fail("label must be finite and >= 0");
      }
      break;
    case LossKind::kGammaDeviance:
      if (!(label.y > 0.0) || !std::isfinite(label.y)) {
        fail("label must be finite and > 0");
      }
      break;
    case LossKind::kMultinomial: {
      double cls = label.y;
      if (cls != std::floor(cls) || cls < 0.0 ||
          cls >= static_cast<double>(spec.num_class)) {
        fail("label must be a class index in [0, num_class)");
      }
      break;
    }
    case LossKind::kAftNormal:
      if (!(label.t_lower > 0.0) || !std::isfinite(label.t_lower)) {
        fail("t_lower must be finite and > 0");
      }
      if (!(label.t_upper >= label.t_lower)) {
        fail("interval must satisfy t_lower <= t_upper");
      }
      break;
  }
}

double raw_loss(const LossSpec& spec, const Label& label, const double* f) {
  switch (spec.kind) {
    case LossKind::kSquared: {
      double r = label.y - f[0];
      return 0.5 * r * r;
    }
    case LossKind::kLogisticMargin:
      return log1p_exp_neg(label.y * f[0]);
    case LossKind::kHingeMargin:
      return std::max(0.0, 1.0 - label.y * f[0]);
    case LossKind::kPoisson:
      return std::exp(f[0]) - label.y * f[0];
    case LossKind::kGammaDeviance:
      return 2.0 * (label.y * std::exp(-f[0]) - 1.0 - std::log(label.y) + f[0]);
    case LossKind::kTweedie: {
      double p = spec.tweedie_power;
      return -label.y * std::exp((1.0 - p) * f[0]) / (1.0 - p) +
             std::exp((2.0 - p) * f[0]) / (2.0 - p);
    }
    case LossKind::kMultinomial: {
      int k = spec.num_class;
      double m = f[0];
      for (int j = 1; j < k; ++j) m = std::max(m, f[j]);
      double sum = 0.0;
      for (int j = 0; j < k; ++j) sum += std::exp(f[j] - m);
      return m + std::log(sum) - f[static_cast<int>(label.y)];
    }
    case LossKind::kAftNormal: {
      double rho = spec.aft_scale;
      double zl = (std::log(label.t_lower) - f[0]) / rho;
      if (is_uncensored(label)) {
        return std::log(rho) + std::log(label.t_lower) + kLogSqrt2Pi +
               0.5 * zl * zl;
      }
      if (is_right_censored(label)) {
        return -std::log(std::max(norm_sf(zl), kAftMassEps));
      }
      double zu = (std::log(label.t_upper) - f[0]) / rho;
      return -std::log(std::max(norm_cdf(zu) - norm_cdf(zl), kAftMassEps));
    }
  }
  throw UsageError("unknown loss kind");
}

void grad_hess(const LossSpec& spec, const Label& label, const double* f,
               double* d, double* h) {
  switch (spec.kind) {
    case LossKind::kSquared:
      d[0] = f[0] - label.y;
      h[0] = 1.0;
      return;
    case LossKind::kLogisticMargin: {
      double m = label.y * f[0];
      double p = sigmoid(m);
      d[0] = -label.y * (1.0 - p);
      h[0] = std::max(p * (1.0 - p), kHessFloor);
      return;
    }
    case LossKind::kHingeMargin:
      d[0] = label.y * f[0] < 1.0 ? -label.y : 0.0;
      h[0] = 1.0;  // gradient-step surrogate
      return;
    case LossKind::kPoisson:
      d[0] = std::exp(f[0]) - label.y;
      h[0] = std::max(std::exp(std::min(f[0], kExpClamp)), kHessFloor);
      return;
    case LossKind::kGammaDeviance:
      d[0] = 2.0 * (1.0 - label.y * std::exp(-f[0]));
      h[0] = std::max(2.0 * label.y * std::exp(-f[0]), kHessFloor);
      return;
    case LossKind::kTweedie: {
      double p = spec.tweedie_power;
      d[0] = -label.y * std::exp((1.0 - p) * f[0]) +
             std::exp((2.0 - p) * f[0]);
      // Clamped score in h only, so extreme divergence cannot overflow it.
      double fc = std::clamp(f[0], -kExpClamp, kExpClamp);
      h[0] = std::max(label.y * (p - 1.0) * std::exp((1.0 - p) * fc) +
                          (2.0 - p) * std::exp((2.0 - p) * fc),
                      kHessFloor);
      return;
    }
    case LossKind::kMultinomial: {
      int k = spec.num_class;
      double m = f[0];
      for (int j = 1; j < k; ++j) m = std::max(m, f[j]);
      double sum = 0.0;
      for (int j = 0; j < k; ++j) sum += std::exp(f[j] - m);
      int y = static_cast<int>(label.y);
      for (int j = 0; j < k; ++j) {
        double p = std::exp(f[j] - m) / sum;
        d[j] = p - (j == y ? 1.0 : 0.0);
        h[j] = std::max(p * (1.0 - p), kHessFloor);
      }
      return;
    }
    case LossKind::kAftNormal: {
      double rho = spec.aft_scale;
      double rho2 = rho * rho;
      double zl = (std::log(label.t_lower) - f[0]) / rho;
      if (is_uncensored(label)) {
        d[0] = -zl / rho;
        h[0] = 1.0 / rho2;
      } else if (is_right_censored(label)) {
        double s = std::max(norm_sf(zl), kAftMassEps);
        double pdf = norm_pdf(zl);
        d[0] = -pdf / (rho * s);
        h[0] = pdf * (pdf - zl * s) / (rho2 * s * s);
      } else {
        double zu = (std::log(label.t_upper) - f[0]) / rho;
        double mass = std::max(norm_cdf(zu) - norm_cdf(zl), kAftMassEps);
        double pl = norm_pdf(zl), pu = norm_pdf(zu);
        d[0] = (pu - pl) / (rho * mass);
        h[0] = ((zu * pu - zl * pl) * mass + (pu - pl) * (pu - pl)) /
               (rho2 * mass * mass);
      }
      h[0] = std::max(h[0], kAftHessFloor);
      return;
    }
  }
  throw UsageError("unknown loss kind");
}

double saturated_value(const LossSpec& spec, const Label& label) {
  switch (spec.kind) {
    case LossKind::kSquared:
    case LossKind::kHingeMargin:
    case LossKind::kLogisticMargin:
    case LossKind::kGammaDeviance:
    case LossKind::kMultinomial:
      return 0.0;
    case LossKind::kPoisson:
      return label.y > 0.0 ? label.y - label.y * std::log(label.y) : 0.0;
    case LossKind::kTweedie: {
      if (label.y == 0.0) return 0.0;
      const double score[1] = {std::log(label.y)};
      return raw_loss(spec, label, score);
    }
    case LossKind::kAftNormal: {
      double rho = spec.aft_scale;
      if (is_uncensored(label)) {
        return std::log(rho) + std::log(label.t_lower) + kLogSqrt2Pi;
      }
      if (is_right_censored(label)) return 0.0;
      // No closed form for intervals; the mass is log-concave in f, so a
      // golden-section scan over a generous bracket finds the minimum.
      double lo = std::log(label.t_lower) - 10.0 * rho;
      double hi = std::log(label.t_upper) + 10.0 * rho;
      return golden_min(
          [&](double f) {
            const double score[1] = {f};
            return raw_loss(spec, label, score);
          },
          lo, hi, 1e-8);
    }
  }
  throw UsageError("unknown loss kind");
}

double shift_constant(const LossSpec& spec, const std::vector<Label>& labels) {
  if (labels.empty()) throw DataError("shift_constant: no observations");
  double c = std::numeric_limits<double>::infinity();
  for (const Label& label : labels) {
    c = std::min(c, saturated_value(spec, label));
  }
  return c;
}

}  // namespace ccboost
