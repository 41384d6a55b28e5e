/*!
 * Copyright 2026 by ccboost Contributors
 * \file booster.cc
 * \brief Weighted Newton boosting rounds over fit_tree.
 */
#include "ccboost/booster.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ccboost/rng.h"

namespace ccboost {

namespace {

/*! \brief Weighted mean of y via exact products; weights sum to > 0. */
double weighted_mean(const std::vector<Label>& labels,
                     const std::vector<double>& weights) {
  Acc2 num, den;
  for (size_t i = 0; i < labels.size(); ++i) {
    num.add_prod(weights[i], labels[i].y);
    den.add(weights[i]);
  }
  return num.value() / den.value();
}

double median(std::vector<double> values) {
  size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  double lower = *std::max_element(values.begin(), values.begin() + mid);
  return lower + (upper - lower) / 2.0;
}

/*! \brief Per-loss warm start for the constant score. */
std::vector<double> initial_base_score(const LossSpec& loss,
                                       const std::vector<Label>& labels,
                                       const std::vector<double>& weights) {
  int width = loss.score_width();
  switch (loss.kind) {
    case LossKind::kSquared:
      return {weighted_mean(labels, weights)};
    case LossKind::kLogisticMargin:
    case LossKind::kHingeMargin:
      return {0.0};
    case LossKind::kMultinomial:
      return std::vector<double>(width, 0.0);
    case LossKind::kPoisson:
    case LossKind::kGammaDeviance:
    case LossKind::kTweedie:
      return {std::log(std::max(weighted_mean(labels, weights), 1e-8))};
    case LossKind::kAftNormal: {
      std::vector<double> t(labels.size());
      for (size_t i = 0; i < labels.size(); ++i) t[i] = labels[i].t_lower;
      return {std::log(median(std::move(t)))};
    }
  }
  throw UsageError("unknown loss kind");
}

void validate_inputs(const Dataset& data, const std::vector<double>& weights,
                     const LossSpec& loss) {
  if (data.n() < 1 || data.p() < 1) {
    throw DataError("fit_boosted: dataset must have at least one row and one "
                    "feature");
  }
  if (weights.size() != static_cast<size_t>(data.n())) {
    throw DataError("fit_boosted: case_weights length " +
                    std::to_string(weights.size()) + " != n " +
                    std::to_string(data.n()));
  }
  bool any_positive = false;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
      throw DataError("fit_boosted: case weight " + std::to_string(i) +
                      " must be finite and >= 0");
    }
    any_positive = any_positive || weights[i] > 0.0;
  }
  if (!any_positive) {
    throw DataError("fit_boosted: all case weights are zero");
  }
  for (int i = 0; i < data.n(); ++i) {
    for (int j = 0; j < data.p(); ++j) {
      if (!std::isfinite(data.features.at(i, j))) {
        throw DataError("fit_boosted: non-finite feature at row " +
                        std::to_string(i) + ", column " + std::to_string(j));
      }
    }
    validate_label(loss, data.labels[i], i);
  }
}

}  // namespace

void validate_boost_config(const BoostConfig& config) {
  if (config.nrounds < 1) throw UsageError("nrounds must be >= 1");
  if (!(config.learning_rate > 0.0 && config.learning_rate <= 1.0)) {
    throw UsageError("eta must lie in (0, 1]");
  }
  if (!(config.reg_lambda >= 0.0)) throw UsageError("lambda must be >= 0");
  if (!(config.reg_alpha >= 0.0)) throw UsageError("alpha must be >= 0");
  if (!(config.gamma >= 0.0)) throw UsageError("gamma must be >= 0");
  if (config.max_depth < 0) throw UsageError("max-depth must be >= 0");
  if (!(config.min_child_hessian >= 0.0)) {
    throw UsageError("min-child-hessian must be >= 0");
  }
  if (!(config.subsample > 0.0 && config.subsample <= 1.0)) {
    throw UsageError("subsample must lie in (0, 1]");
  }
  if (config.base_score && !std::isfinite(*config.base_score)) {
    throw UsageError("base-score must be finite");
  }
}

BoosterModel fit_boosted(const Dataset& data,
                         const std::vector<double>& case_weights,
                         const LossSpec& loss, const BoostConfig& config,
                         const BoosterModel* init_model) {
  validate_loss_spec(loss);
  validate_boost_config(config);
  validate_inputs(data, case_weights, loss);

  const int n = data.n();
  const int width = loss.score_width();

  BoosterModel model;
  std::vector<double> scores;
  int rounds_done = 0;
  if (init_model != nullptr) {
    if (init_model->loss.kind != loss.kind ||
        init_model->feature_count != data.p()) {
      throw UsageError("fit_boosted: init model loss/feature count mismatch");
    }
    model = *init_model;
    model.config = config;
    rounds_done = init_model->round_count();
    scores = predict_scores(*init_model, data.features);
  } else {
    model.loss = loss;
    model.config = config;
    model.feature_count = data.p();
    if (config.base_score) {
      model.base_score.assign(width, *config.base_score);
    } else {
      model.base_score = initial_base_score(loss, data.labels, case_weights);
    }
    scores.resize(static_cast<size_t>(n) * width);
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < width; ++c) {
        scores[static_cast<size_t>(i) * width + c] = model.base_score[c];
      }
    }
  }

  TreeParams tree_params;
  tree_params.reg_lambda = config.reg_lambda;
  tree_params.reg_alpha = config.reg_alpha;
  tree_params.gamma = config.gamma;
  tree_params.max_depth = config.max_depth;
  tree_params.min_child_hessian = config.min_child_hessian;

  std::vector<double> d(static_cast<size_t>(n) * width);
  std::vector<double> h(static_cast<size_t>(n) * width);
  std::vector<double> grad_col(n), hess_col(n);

  for (int m = 0; m < config.nrounds; ++m) {
    for (int i = 0; i < n; ++i) {
      size_t off = static_cast<size_t>(i) * width;
      grad_hess(loss, data.labels[i], &scores[off], &d[off], &h[off]);
      for (int c = 0; c < width; ++c) {
        if (!std::isfinite(d[off + c]) || !std::isfinite(h[off + c])) {
          throw NumericError("fit_boosted: non-finite gradient at round " +
                             std::to_string(rounds_done + m) +
                             ", observation " + std::to_string(i));
        }
      }
    }

    std::vector<int> active;
    if (config.subsample < 1.0) {
      int k = std::max<int>(
          1, static_cast<int>(std::llround(config.subsample * n)));
      Rng rng = Rng::stream(config.seed, RngPurpose::kSubsample,
                            static_cast<uint64_t>(rounds_done + m));
      active = rng.sample_without_replacement(n, k);
      std::sort(active.begin(), active.end());
    } else {
      active.resize(n);
      for (int i = 0; i < n; ++i) active[i] = i;
    }

    for (int c = 0; c < width; ++c) {
      for (int i = 0; i < n; ++i) {
        grad_col[i] = d[static_cast<size_t>(i) * width + c];
        hess_col[i] = h[static_cast<size_t>(i) * width + c];
      }
      RegressionTree tree =
          fit_tree(data.features, active, grad_col, hess_col, case_weights,
                   tree_params);
      for (int i = 0; i < n; ++i) {
        scores[static_cast<size_t>(i) * width + c] +=
            config.learning_rate * tree.predict_row(data.features.row(i));
      }
      model.trees.push_back(std::move(tree));
    }
  }
  return model;
}

std::vector<double> predict_scores(const BoosterModel& model,
                                   const Matrix& features, int begin,
                                   int end) {
  if (features.cols() != model.feature_count) {
    throw DataError("predict: feature count " +
                    std::to_string(features.cols()) + " != model's " +
                    std::to_string(model.feature_count));
  }
  int rounds = model.round_count();
  if (end < 0) end = rounds;
  if (begin < 0 || begin > end || end > rounds) {
    throw UsageError("predict: iteration range [" + std::to_string(begin) +
                     ", " + std::to_string(end) + ") out of [0, " +
                     std::to_string(rounds) + "]");
  }

  const int n = features.rows();
  const int width = model.score_width();
  std::vector<double> scores(static_cast<size_t>(n) * width);
  for (int i = 0; i < n; ++i) {
    const double* x = features.row(i);
    for (int c = 0; c < width; ++c) {
      double s = model.base_score[c];
      for (int m = begin; m < end; ++m) {
        s += model.config.learning_rate *
             model.trees[static_cast<size_t>(m) * width + c].predict_row(x);
      }
      scores[static_cast<size_t>(i) * width + c] = s;
    }
  }
  return scores;
}

std::vector<double> feature_gain(const BoosterModel& model) {
  std::vector<double> gain(model.feature_count, 0.0);
  for (const RegressionTree& tree : model.trees) {
    for (const TreeNode& node : tree.nodes) {
      if (!node.is_leaf()) gain[node.feature] += node.gain;
    }
  }
  return gain;
}

std::vector<std::pair<int, double>> feature_importance(
    const BoosterModel& model) {
  std::vector<double> gain = feature_gain(model);
  std::vector<std::pair<int, double>> out;
  out.reserve(gain.size());
  for (int j = 0; j < static_cast<int>(gain.size()); ++j) {
    out.emplace_back(j, gain[j]);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  return out;
}

}  // namespace ccboost
