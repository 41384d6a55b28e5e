/*!
 * Copyright 2026 by ccboost Contributors
 * \file irco.h
 * \brief Iteratively reweighted outer loop around the weighted booster.
 *
 * Alternates between computing robustness weights from the concave component
 * at the current fit and re-minimizing the weighted convex loss.  The
 * composite objective rho(f) = sum_i g(s_i(f) - C) is nonincreasing under
 * exact inner minimization; the engine tracks rho and flags violations.
 */
#ifndef CCBOOST_IRCO_H_
#define CCBOOST_IRCO_H_

#include <vector>

#include "ccboost/booster.h"
#include "ccboost/cc_family.h"

namespace ccboost {

struct IrcoConfig {
  int outer_iterations = 10;  // K
  double tolerance = 1e-6;    // relative rho decrease that stops early
  enum class Mode { kRefit, kContinue } mode = Mode::kRefit;

  bool operator==(const IrcoConfig& other) const = default;
};

const char* irco_mode_name(IrcoConfig::Mode mode);
IrcoConfig::Mode parse_irco_mode(const std::string& name);

struct IrcoResult {
  BoosterModel model;
  ConcaveSpec concave;            // validated spec (gcave delta filled in)
  IrcoConfig irco;
  std::vector<double> weight_update;  // final per-observation weights in [0, 1]
  std::vector<double> rho_trace;      // rho(f^(0)) ... rho(f^(K))
  long long niter = 0;                // total inner boosting rounds consumed
  double shift_c = 0.0;               // saturated-model nonnegativity shift
};

/*!
 * \brief Run the reweighted outer loop.
 *
 * f^(0) is a unit-weight fit; iteration k computes z_i = s_i(f^(k-1)) - C,
 * weights w_i = weight(cc, z_i), and refits with those case weights (from
 * scratch in refit mode, warm-started in continue mode).  Stops early once
 * the relative rho decrease drops below irco.tolerance.  A rho increase
 * beyond 1e-6 * max(1, |rho|) raises NumericError; smaller increases only
 * warn (an underfit inner solver can wiggle).
 */
IrcoResult irboost(const Dataset& data, const LossSpec& loss,
                   const ConcaveSpec& cc, const BoostConfig& boost,
                   const IrcoConfig& irco);

/*! \brief rho(model) = sum_i g(z_i) with z_i = raw_loss_i - shift_c, floored at 0. */
double objective_rho(const BoosterModel& model, const Dataset& data,
                     const LossSpec& loss, const Concave& cc, double shift_c);

/*! \brief Per-observation weights of any fitted model (two-stage workflow). */
std::vector<double> weight_snapshot(const BoosterModel& model,
                                    const Dataset& data, const LossSpec& loss,
                                    const Concave& cc, double shift_c);

}  // namespace ccboost

#endif  // CCBOOST_IRCO_H_
