/*!
 * Copyright 2026 by ccboost Contributors
 * \file metrics.h
 * \brief Evaluation metrics for the supported loss families.
 */
#ifndef CCBOOST_METRICS_H_
#define CCBOOST_METRICS_H_

#include <vector>

#include "ccboost/data.h"
#include "ccboost/loss.h"

namespace ccboost {

double mse(const std::vector<double>& pred, const std::vector<Label>& labels);
double mae(const std::vector<double>& pred, const std::vector<Label>& labels);

/*! \brief Share of margins with sign(f) != y; f == 0 counts as an error. */
double misclassification_margin(const std::vector<double>& scores,
                                const std::vector<Label>& labels);

/*! \brief Share of rows whose argmax score misses the class index. */
double misclassification_argmax(const std::vector<double>& scores,
                                int num_class,
                                const std::vector<Label>& labels);

/*! \brief Mean of 2 (raw_loss - saturated_value) at the raw scores. */
double mean_poisson_deviance(const std::vector<double>& scores,
                             const std::vector<Label>& labels);

/*!
 * \brief Harrell's concordance index.
 *
 * A pair is comparable when the smaller observed time belongs to an
 * uncensored row; it is concordant when the longer-lived row has the higher
 * score, and score ties count 1/2.  Throws DataError when no pair is
 * comparable.
 */
double concordance_index(const std::vector<double>& scores,
                         const std::vector<Label>& labels);

}  // namespace ccboost

#endif  // CCBOOST_METRICS_H_
