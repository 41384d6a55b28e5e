/*!
 * Copyright 2026 by ccboost Contributors
 * \file booster.h
 * \brief Newton-step gradient boosting with per-observation case weights.
 */
#ifndef CCBOOST_BOOSTER_H_
#define CCBOOST_BOOSTER_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ccboost/data.h"
#include "ccboost/loss.h"
#include "ccboost/tree.h"

namespace ccboost {

struct BoostConfig {
  int nrounds = 50;
  double learning_rate = 0.3;  // shrinkage nu in (0, 1]
  double reg_lambda = 1.0;
  double reg_alpha = 0.0;
  double gamma = 0.0;
  int max_depth = 6;
  double min_child_hessian = 0.0;
  double subsample = 1.0;
  uint64_t seed = 0;
  std::optional<double> base_score;  // overrides the per-loss warm start

  bool operator==(const BoostConfig& other) const = default;
};

/*! \brief Check config ranges; throws UsageError. */
void validate_boost_config(const BoostConfig& config);

/*!
 * \brief Additive tree model.  Prediction is
 * base_score + nu * sum of tree outputs; trees are stored round-major and
 * interleaved by class for the multinomial loss.  Leaf values are raw
 * (pre-shrinkage); nu is applied at prediction time.
 */
struct BoosterModel {
  LossSpec loss;
  BoostConfig config;
  std::vector<double> base_score;  // score_width() entries
  std::vector<RegressionTree> trees;
  int feature_count = 0;

  int score_width() const { return loss.score_width(); }
  int round_count() const {
    return static_cast<int>(trees.size()) / score_width();
  }
};

/*!
 * \brief Run config.nrounds of weighted Newton boosting.
 *
 * Each round evaluates (d_i, h_i) at the current scores; case weights stay a
 * separate factor all the way into the tree's split sums (the weighted loss
 * sum w_i s_i has derivatives w_i d_i and w_i h_i).  Zero-weight and
 * subsampled-out rows do not influence the tree but still receive score
 * updates.  With init_model, boosting continues from its scores and the
 * returned model extends its tree list (warm start).
 */
BoosterModel fit_boosted(const Dataset& data,
                         const std::vector<double>& case_weights,
                         const LossSpec& loss, const BoostConfig& config,
                         const BoosterModel* init_model = nullptr);

/*!
 * \brief Scores for rounds [begin, end); pass end = -1 for all rounds.
 *
 * Output is row-major n x score_width().  begin == end yields base_score.
 */
std::vector<double> predict_scores(const BoosterModel& model,
                                   const Matrix& features, int begin = 0,
                                   int end = -1);

/*! \brief Total split gain per feature; unused features get 0. */
std::vector<double> feature_gain(const BoosterModel& model);

/*! \brief feature_gain as (feature, gain) pairs sorted by decreasing gain. */
std::vector<std::pair<int, double>> feature_importance(
    const BoosterModel& model);

}  // namespace ccboost

#endif  // CCBOOST_BOOSTER_H_
