/*!
 * Copyright 2026 by ccboost Contributors
 * \file loss.h
 * \brief Convex components s: values, Newton derivatives, saturated shift.
 *
 * Every loss exposes the raw (un-shifted) value, the first and second
 * derivatives with respect to the score f, the per-observation saturated
 * value inf_f s(y, f), and the dataset-level shift constant that makes the
 * shifted loss z = s - C nonnegative, as the concave components require.
 */
#ifndef CCBOOST_LOSS_H_
#define CCBOOST_LOSS_H_

#include <string>
#include <vector>

#include "ccboost/common.h"
#include "ccboost/data.h"

namespace ccboost {

enum class LossKind {
  kSquared,
  kLogisticMargin,
  kHingeMargin,
  kPoisson,
  kGammaDeviance,
  kTweedie,
  kMultinomial,
  kAftNormal,
};

/*! \brief CLI/config string of a loss kind, e.g. "reg:squarederror". */
const char* loss_kind_name(LossKind kind);
LossKind parse_loss_kind(const std::string& name);  // throws UsageError

struct LossSpec {
  LossKind kind = LossKind::kSquared;
  int num_class = 1;          // multinomial only, >= 2
  double tweedie_power = 1.5;  // tweedie only, in (1, 2)
  double aft_scale = 1.0;      // aft_normal only, rho > 0

  /*! \brief Scores per observation: num_class for multinomial, else 1. */
  int score_width() const {
    return kind == LossKind::kMultinomial ? num_class : 1;
  }
};

/*! \brief Check spec parameter ranges; throws UsageError. */
void validate_loss_spec(const LossSpec& spec);

/*! \brief Check one label against the loss domain; throws DataError. */
void validate_label(const LossSpec& spec, const Label& label, int index);

/*! \brief Un-shifted convex loss at score f (f has score_width entries). */
double raw_loss(const LossSpec& spec, const Label& label, const double* f);

/*!
 * \brief First/second derivatives of raw_loss with respect to f.
 *
 * d and h receive score_width entries.  h is clamped to stay positive:
 * 1e-16 everywhere, 1e-6 for aft_normal where flat likelihood tails would
 * otherwise stall Newton steps.  The hinge h is the constant 1 surrogate,
 * which turns the Newton step into a plain gradient step.
 */
void grad_hess(const LossSpec& spec, const Label& label, const double* f,
               double* d, double* h);

/*! \brief inf_f raw_loss(label, f), the saturated-model value. */
double saturated_value(const LossSpec& spec, const Label& label);

/*! \brief C = min_i saturated_value(label_i); raw_loss - C >= 0 everywhere. */
double shift_constant(const LossSpec& spec, const std::vector<Label>& labels);

}  // namespace ccboost

#endif  // CCBOOST_LOSS_H_
