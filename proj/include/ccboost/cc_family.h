/*!
 * Copyright 2026 by ccboost Contributors
 * \file cc_family.h
 * \brief Concave components g and their derivative-based observation weights.
 *
 * Each kind is a nondecreasing closed concave function of the shifted convex
 * loss z >= 0.  The derivative (a chosen element of the superdifferential at
 * kinks), divided by sup g', is the robustness weight in (0, 1] assigned to
 * an observation.
 */
#ifndef CCBOOST_CC_FAMILY_H_
#define CCBOOST_CC_FAMILY_H_

#include <string>

#include "ccboost/common.h"

namespace ccboost {

enum class ConcaveKind {
  kHcave,
  kAcave,
  kBcave,
  kCcave,
  kDcave,
  kEcave,
  kGcave,
  kTcave,
};

const char* concave_kind_name(ConcaveKind kind);
ConcaveKind parse_concave_kind(const std::string& name);  // throws UsageError

/*!
 * \brief User-facing concave component parameters.
 *
 * sigma is the robustness scale (> 0; tcave also admits 0).  delta is
 * required for ecave and derived for gcave; other kinds ignore it.
 */
struct ConcaveSpec {
  ConcaveKind kind = ConcaveKind::kCcave;
  double sigma = 1.0;
  double delta = 0.0;
};

/*!
 * \brief Validated concave component with cached normalization.
 *
 * Immutable after construction; value/weight are pure and safe to call
 * concurrently.
 */
class Concave {
 public:
  /*! \brief Check ranges, derive gcave's delta, cache sup g'. Throws UsageError. */
  static Concave validate(const ConcaveSpec& spec);

  /*! \brief g(z).  Throws UsageError for z < 0. */
  double value(double z) const;

  /*!
   * \brief Chosen superdifferential element of g at z, un-normalized.
   *
   * At branch kinks the larger one-sided slope is kept (tcave keeps weight 1
   * at z == sigma: the least aggressive choice in [0, 1]).
   */
  double weight_raw(double z) const;

  /*! \brief weight_raw(z) / sup g'; lies in [0, 1]. */
  double weight(double z) const { return weight_raw(z) / norm_; }

  const ConcaveSpec& spec() const { return spec_; }
  double norm() const { return norm_; }

 private:
  explicit Concave(const ConcaveSpec& spec) : spec_(spec) {}

  ConcaveSpec spec_;
  double norm_ = 1.0;
};

}  // namespace ccboost

#endif  // CCBOOST_CC_FAMILY_H_
