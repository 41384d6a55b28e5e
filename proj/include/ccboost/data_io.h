/*!
 * Copyright 2026 by ccboost Contributors
 * \file data_io.h
 * \brief CSV ingestion, synthetic dataset generators, deterministic splits.
 */
#ifndef CCBOOST_DATA_IO_H_
#define CCBOOST_DATA_IO_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccboost/data.h"
#include "ccboost/loss.h"

namespace ccboost {

/*!
 * \brief Column layout for load_csv.  label_columns empty picks the default:
 * the last column, or the last two (lower, upper) for survival:aft.
 */
struct CsvLayout {
  bool header = true;
  std::vector<int> label_columns;
};

/*!
 * \brief Parse a dense numeric CSV into a Dataset.
 *
 * All cells must be numeric; the AFT upper label accepts the literal token
 * +Inf (any case) for right-censored rows.  Features must be finite.  Errors
 * carry 1-based line and column numbers.
 */
Dataset load_csv(const std::string& path, const LossSpec& loss,
                 const CsvLayout& layout = {});

/*!
 * \brief Write features plus label column(s), 17 significant digits.
 *
 * Labels go last (lower, upper for AFT; +Inf token for unbounded uppers), so
 * a default-layout load_csv round-trips the dataset exactly.
 */
void save_csv(const std::string& path, const Dataset& data,
              const LossSpec& loss, bool header = true);

/*! \brief Parse a CSV of features only (every column is a feature). */
Matrix load_features_csv(const std::string& path, bool header = true);

/*! \brief Linear-model data with shifted responses at known outlier rows. */
struct RegressionSim {
  Dataset data;
  std::vector<int> outlier_rows;  // ascending
  std::vector<double> beta;
};

/*!
 * \brief y = x beta + noise with beta_j = 1 + j; n_outliers responses get
 * +outlier_shift.  Every observation draws from its own substream, so
 * growing n keeps existing rows unchanged.
 */
RegressionSim gen_contaminated_regression(int n, int p, int n_outliers,
                                          double outlier_shift,
                                          double noise_sd, uint64_t seed);

/*!
 * \brief The three-symbol margin construction with flipped training labels.
 *
 * y = +-1 equiprobable; symbols A/B/C with probability 0.25/0.25/0.5 set the
 * 21 feature signs (C agrees with y on 5 random coordinates of the first 11
 * and 6 of the last 10).  Training labels flip independently with the given
 * contamination probability; test labels are clean.
 */
std::pair<Dataset, Dataset> gen_long_servedio(int n_train, int n_test,
                                              double contamination,
                                              uint64_t seed);

/*!
 * \brief k spherical Gaussian classes; adjacent class centers sit
 * `separation` apart along the diagonal.  Labels are class indices.
 */
Dataset gen_gaussian_blobs(int n, int p, int num_class, double separation,
                           uint64_t seed);

/*! \brief Poisson counts with log-linear mean exp(0.5 + x beta). */
Dataset gen_poisson_counts(int n, int p, uint64_t seed);

/*! \brief Log-normal survival data plus an uncorrupted copy. */
struct SurvivalSim {
  Dataset data;   // with censoring and injected outlier times
  Dataset clean;  // same censoring, outlier times not inflated
  std::vector<int> outlier_rows;  // ascending, always uncensored rows
};

/*!
 * \brief log T = x beta + 0.5 N(0,1); about censor_frac of rows are
 * right-censored before their event.  n_outliers uncensored times are
 * multiplied by outlier_factor in `data` (and left alone in `clean`).
 */
SurvivalSim gen_lognormal_survival(int n, int p, double censor_frac,
                                   int n_outliers, double outlier_factor,
                                   uint64_t seed);

/*! \brief Seeded permutation split; fraction of rows goes to train. */
std::pair<Dataset, Dataset> train_test_split(const Dataset& data,
                                             double fraction, uint64_t seed);

}  // namespace ccboost

#endif  // CCBOOST_DATA_IO_H_
