/*!
 * Copyright 2026 by ccboost Contributors
 * \file common.h
 * \brief Shared error types, compensated accumulation, and thread budget.
 */
#ifndef CCBOOST_COMMON_H_
#define CCBOOST_COMMON_H_

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ccboost {

/*! \brief Invalid flags, specs, or parameter combinations. CLI exit code 1. */
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/*! \brief Malformed or inconsistent input data. CLI exit code 2. */
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/*! \brief Non-finite values or optimizer breakdown. CLI exit code 3. */
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/*!
 * \brief Double-double accumulator for gradient/hessian sums.
 *
 * Sums are kept as an unevaluated pair hi + lo (~106 significand bits).
 * add() uses TwoSum, add_prod() uses an fma-based exact product followed by
 * TwoSum, so every term enters the pair without rounding.  This is what makes
 * integer case weights reproduce physically replicated rows: w * d enters the
 * sum as the exact value d + ... + d would.
 */
class Acc2 {
 public:
  void add(double x) {
    double s = hi_ + x;
    double bb = s - hi_;
    double err = (hi_ - (s - bb)) + (x - bb);
    hi_ = s;
    lo_ += err;
  }

  /*! \brief Accumulate the exact product w * x. */
  void add_prod(double w, double x) {
    double p = w * x;
    double perr = std::fma(w, x, -p);
    add(p);
    lo_ += perr;
  }

  double value() const { return hi_ + lo_; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

/*! \brief Thread budget: CCBOOST_THREADS if set and valid, else 1. */
inline int thread_budget() {
  const char* env = std::getenv("CCBOOST_THREADS");
  if (env == nullptr) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

}  // namespace ccboost

#endif  // CCBOOST_COMMON_H_
