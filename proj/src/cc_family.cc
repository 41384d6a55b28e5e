/*!
 * Copyright 2026 by ccboost Contributors
 * \file cc_family.cc
 * \brief Concave component values, superdifferential weights, validation.
 */
#include "ccboost/cc_family.h"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

namespace ccboost {

namespace {

constexpr double kGcaveDeltaMin = 1e-4;  // delta floor for gcave, 0 < sigma < 1

constexpr std::array<std::pair<ConcaveKind, const char*>, 8> kKindNames = {{
    {ConcaveKind::kHcave, "hcave"},
    {ConcaveKind::kAcave, "acave"},
    {ConcaveKind::kBcave, "bcave"},
    {ConcaveKind::kCcave, "ccave"},
    {ConcaveKind::kDcave, "dcave"},
    {ConcaveKind::kEcave, "ecave"},
    {ConcaveKind::kGcave, "gcave"},
    {ConcaveKind::kTcave, "tcave"},
}};

double gcave_delta(double sigma) {
  return sigma >= 1.0 ? (sigma - 1.0) / 2.0 : kGcaveDeltaMin;
}

/*! \brief gcave slope z^(s-1) / (1+z)^(s+1); exponent 0 handled so z = 0 works. */
double gcave_slope(double z, double sigma) {
  double num = sigma == 1.0 ? 0.0 : (sigma - 1.0) * std::log(z);
  return std::exp(num - (sigma + 1.0) * std::log1p(z));
}

/*! \brief Slope of ecave's linear branch, 2 e^(-d/s) / sqrt(pi s d). */
double ecave_slope(double sigma, double delta) {
  return 2.0 * std::exp(-delta / sigma) /
         std::sqrt(std::numbers::pi * sigma * delta);
}

void check_z(double z) {
  if (!(z >= 0.0)) {
    throw UsageError("concave component: z must be finite and >= 0");
  }
}

}  // namespace

const char* concave_kind_name(ConcaveKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  throw UsageError("unknown concave kind");
}

ConcaveKind parse_concave_kind(const std::string& name) {
  for (const auto& [k, kname] : kKindNames) {
    if (name == kname) return k;
  }
  std::string valid;
  for (const auto& [k, kname] : kKindNames) {
    valid += valid.empty() ? kname : std::string(", ") + kname;
  }
  throw UsageError("unknown cfun \"" + name + "\"; valid kinds: " + valid);
}

Concave Concave::validate(const ConcaveSpec& spec) {
  const char* name = concave_kind_name(spec.kind);
  if (spec.kind == ConcaveKind::kTcave) {
    if (!(spec.sigma >= 0.0)) {
      throw UsageError(std::string(name) + ": sigma must be >= 0");
    }
  } else if (!(spec.sigma > 0.0)) {
    throw UsageError(std::string(name) + ": sigma must be > 0");
  }

  Concave out(spec);
  switch (spec.kind) {
    case ConcaveKind::kEcave:
      if (!(spec.delta > 0.0)) {
        throw UsageError("ecave: delta must be > 0");
      }
      out.norm_ = ecave_slope(spec.sigma, spec.delta);
      break;
    case ConcaveKind::kGcave:
      // delta is derived, never user-set.
      out.spec_.delta = gcave_delta(spec.sigma);
      out.norm_ = gcave_slope(out.spec_.delta, spec.sigma);
      break;
    default:
      out.spec_.delta = 0.0;
      out.norm_ = 1.0;
      break;
  }
  return out;
}

double Concave::value(double z) const {
  check_z(z);
  const double s = spec_.sigma;
  switch (spec_.kind) {
    case ConcaveKind::kHcave:
      if (z <= s * s / 2.0) return z;
      return s * std::sqrt(2.0 * z) - s * s / 2.0;
    case ConcaveKind::kAcave: {
      if (z > s * s * std::numbers::pi * std::numbers::pi / 2.0) {
        return 2.0 * s * s;
      }
      // 1 - cos(u) written as 2 sin^2(u/2) to keep small z accurate.
      double half_u = std::sqrt(2.0 * z) / (2.0 * s);
      double sh = std::sin(half_u);
      return 2.0 * s * s * sh * sh;
    }
    case ConcaveKind::kBcave: {
      if (z > s * s / 2.0) return s * s / 6.0;
      // 1 - t^3 factored through 1 - t = 2z/sigma^2.
      double t = 1.0 - 2.0 * z / (s * s);
      return z * (1.0 + t + t * t) / 3.0;
    }
    case ConcaveKind::kCcave:
      return -s * s * std::expm1(-z / (s * s));
    case ConcaveKind::kDcave:
      return (std::log1p(z) - std::log1p(z * std::exp(-s))) / (-std::expm1(-s));
    case ConcaveKind::kEcave: {
      double d = spec_.delta;
      double c = norm_;
      if (z <= d) return c * z;
      // erf(sqrt(z/s)) - erf(sqrt(d/s)) via erfc for large-argument accuracy.
      return std::erfc(std::sqrt(d / s)) - std::erfc(std::sqrt(z / s)) + c * d;
    }
    case ConcaveKind::kGcave: {
      double d = spec_.delta;
      if (z <= d) return norm_ * z;
      double frac = [&](double t) {
        return std::exp(s * (std::log(t) - std::log1p(t)));  // (t/(1+t))^s
      }(z);
      double frac_d = std::exp(s * (std::log(d) - std::log1p(d)));
      return (frac - frac_d) / s + norm_ * d;
    }
    case ConcaveKind::kTcave:
      return std::min(s, z);
  }
  throw UsageError("unknown concave kind");
}

double Concave::weight_raw(double z) const {
  check_z(z);
  const double s = spec_.sigma;
  switch (spec_.kind) {
    case ConcaveKind::kHcave:
      if (z <= s * s / 2.0) return 1.0;
      return s / std::sqrt(2.0 * z);
    case ConcaveKind::kAcave: {
      if (z > s * s * std::numbers::pi * std::numbers::pi / 2.0) return 0.0;
      if (z == 0.0) return 1.0;  // sin(u)/u limit
      double u = std::sqrt(2.0 * z) / s;
      return std::sin(u) / u;
    }
    case ConcaveKind::kBcave: {
      if (z > s * s / 2.0) return 0.0;
      double t = 1.0 - 2.0 * z / (s * s);
      return t * t;
    }
    case ConcaveKind::kCcave:
      return std::exp(-z / (s * s));
    case ConcaveKind::kDcave:
      return 1.0 / ((1.0 + z) * (1.0 + z * std::exp(-s)));
    case ConcaveKind::kEcave:
      if (z <= spec_.delta) return norm_;
      return std::exp(-z / s) / std::sqrt(std::numbers::pi * s * z);
    case ConcaveKind::kGcave:
      if (z <= spec_.delta) return norm_;
      return gcave_slope(z, s);
    case ConcaveKind::kTcave:
      // Subdifferential at the kink z == sigma is [0, 1]; keep 1.
      return z <= s ? 1.0 : 0.0;
  }
  throw UsageError("unknown concave kind");
}

}  // namespace ccboost
