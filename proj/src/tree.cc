/*!
 * Copyright 2026 by ccboost Contributors
 * \file tree.cc
 * \brief Exact greedy tree growing on presorted feature columns.
 */
#include "ccboost/tree.h"

#include <algorithm>
#include <cmath>
#include <thread>

namespace ccboost {

namespace {

struct Entry {
  double value;
  int row;
};

/*! \brief T_alpha(G)^2 / (H + lambda); 0 on a degenerate denominator. */
double partition_score(double g, double h, double reg_lambda,
                       double reg_alpha) {
  double t = soft_threshold(g, reg_alpha);
  double denom = h + reg_lambda;
  return denom > 0.0 ? t * t / denom : 0.0;
}

/*! \brief Threshold strictly above lo and at most hi, so "< t" separates. */
double split_point(double lo, double hi) {
  double mid = lo + (hi - lo) / 2.0;
  return mid > lo ? mid : hi;
}

struct ScanResult {
  bool found = false;
  double threshold = 0.0;
  double gain = 0.0;
  double h_left = 0.0;
  double h_right = 0.0;
};

/*!
 * \brief Best candidate along one presorted column.
 *
 * Prefix sums run through Acc2 so each w * d term enters exactly; the right
 * side is the (bitwise deterministic) difference from the node totals.
 */
ScanResult scan_column(const std::vector<Entry>& col, const double* grad,
                       const double* hess, const double* weights, double g_tot,
                       double h_tot, double parent_score,
                       const TreeParams& params) {
  ScanResult best;
  Acc2 g_left, h_left;
  for (size_t i = 0; i + 1 < col.size(); ++i) {
    int r = col[i].row;
    g_left.add_prod(weights[r], grad[r]);
    h_left.add_prod(weights[r], hess[r]);
    if (col[i + 1].value == col[i].value) continue;
    double gl = g_left.value(), hl = h_left.value();
    double gr = g_tot - gl, hr = h_tot - hl;
    double gain = 0.5 * (partition_score(gl, hl, params.reg_lambda,
                                         params.reg_alpha) +
                         partition_score(gr, hr, params.reg_lambda,
                                         params.reg_alpha) -
                         parent_score) -
                  params.gamma;
    if (gain > 0.0 && (!best.found || gain > best.gain)) {
      best.found = true;
      best.threshold = split_point(col[i].value, col[i + 1].value);
      best.gain = gain;
      best.h_left = hl;
      best.h_right = hr;
    }
  }
  return best;
}

/*! \brief Run fn(j) for every feature, chunked over thread_budget() threads. */
template <typename Fn>
void for_each_feature(int p, Fn fn) {
  int budget = std::min(thread_budget(), p);
  if (budget <= 1) {
    for (int j = 0; j < p; ++j) fn(j);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(budget);
  for (int t = 0; t < budget; ++t) {
    pool.emplace_back([&, t] {
      for (int j = t; j < p; j += budget) fn(j);
    });
  }
  for (auto& th : pool) th.join();
}

class TreeBuilder {
 public:
  TreeBuilder(const Matrix& features, const std::vector<double>& grad,
              const std::vector<double>& hess,
              const std::vector<double>& weights, const TreeParams& params)
      : features_(features), grad_(grad.data()), hess_(hess.data()),
        weights_(weights.data()), params_(params) {}

  RegressionTree build(const std::vector<int>& active_rows) {
    std::vector<std::vector<Entry>> cols(features_.cols());
    for (int j = 0; j < features_.cols(); ++j) {
      auto& col = cols[j];
      col.reserve(active_rows.size());
      for (int r : active_rows) {
        if (weights_[r] > 0.0) col.push_back({features_.at(r, j), r});
      }
      std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) {
        return a.value != b.value ? a.value < b.value : a.row < b.row;
      });
    }
    grow(std::move(cols), 0);
    return std::move(tree_);
  }

 private:
  /*! \brief Append the node for these rows; returns its index. */
  int grow(std::vector<std::vector<Entry>> cols, int depth) {
    int self = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();

    Acc2 g_acc, h_acc;
    const std::vector<Entry>& rows = cols.empty() ? kNoRows : cols[0];
    for (const Entry& e : rows) {
      g_acc.add_prod(weights_[e.row], grad_[e.row]);
      h_acc.add_prod(weights_[e.row], hess_[e.row]);
    }
    double g_tot = g_acc.value(), h_tot = h_acc.value();

    ScanResult best;
    int best_feature = -1;
    if (depth < params_.max_depth && rows.size() >= 2) {
      double parent_score = partition_score(g_tot, h_tot, params_.reg_lambda,
                                            params_.reg_alpha);
      std::vector<ScanResult> per_feature(cols.size());
      for_each_feature(static_cast<int>(cols.size()), [&](int j) {
        per_feature[j] = scan_column(cols[j], grad_, hess_, weights_, g_tot,
                                     h_tot, parent_score, params_);
      });
      for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        if (per_feature[j].found &&
            (best_feature < 0 || per_feature[j].gain > best.gain)) {
          best = per_feature[j];
          best_feature = j;
        }
      }
      // The hessian floor applies to the argmax candidate, not the runner-up.
      if (best_feature >= 0 && (best.h_left < params_.min_child_hessian ||
                                best.h_right < params_.min_child_hessian)) {
        best_feature = -1;
      }
    }

    if (best_feature < 0) {
      tree_.nodes[self].value =
          leaf_weight(g_tot, h_tot, params_.reg_lambda, params_.reg_alpha);
      return self;
    }

    std::vector<std::vector<Entry>> left(cols.size()), right(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      for (const Entry& e : cols[j]) {
        bool goes_left = features_.at(e.row, best_feature) < best.threshold;
        (goes_left ? left[j] : right[j]).push_back(e);
      }
    }
    cols.clear();

    tree_.nodes[self].feature = best_feature;
    tree_.nodes[self].threshold = best.threshold;
    tree_.nodes[self].gain = best.gain;
    int l = grow(std::move(left), depth + 1);
    int r = grow(std::move(right), depth + 1);
    tree_.nodes[self].left = l;
    tree_.nodes[self].right = r;
    return self;
  }

  static const std::vector<Entry> kNoRows;

  const Matrix& features_;
  const double* grad_;
  const double* hess_;
  const double* weights_;
  TreeParams params_;
  RegressionTree tree_;
};

const std::vector<Entry> TreeBuilder::kNoRows = {};

}  // namespace

std::optional<BestSplit> best_split(const std::vector<double>& feature_values,
                                    const std::vector<double>& grad,
                                    const std::vector<double>& hess,
                                    double reg_lambda, double reg_alpha,
                                    double gamma) {
  size_t n = feature_values.size();
  if (n < 2 || grad.size() != n || hess.size() != n) return std::nullopt;

  std::vector<Entry> col(n);
  for (size_t i = 0; i < n; ++i) {
    col[i] = {feature_values[i], static_cast<int>(i)};
  }
  std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) {
    return a.value != b.value ? a.value < b.value : a.row < b.row;
  });

  std::vector<double> unit(n, 1.0);
  Acc2 g_acc, h_acc;
  for (size_t i = 0; i < n; ++i) {
    g_acc.add(grad[col[i].row]);
    h_acc.add(hess[col[i].row]);
  }
  TreeParams params;
  params.reg_lambda = reg_lambda;
  params.reg_alpha = reg_alpha;
  params.gamma = gamma;
  double g_tot = g_acc.value(), h_tot = h_acc.value();
  ScanResult res = scan_column(
      col, grad.data(), hess.data(), unit.data(), g_tot, h_tot,
      partition_score(g_tot, h_tot, reg_lambda, reg_alpha), params);
  if (!res.found) return std::nullopt;

  BestSplit out;
  out.threshold = res.threshold;
  out.gain = res.gain;
  for (size_t i = 0; i < n; ++i) {
    if (feature_values[i] < res.threshold) {
      out.left_rows.push_back(static_cast<int>(i));
    }
  }
  return out;
}

RegressionTree fit_tree(const Matrix& features,
                        const std::vector<int>& active_rows,
                        const std::vector<double>& grad,
                        const std::vector<double>& hess,
                        const std::vector<double>& weights,
                        const TreeParams& params) {
  TreeBuilder builder(features, grad, hess, weights, params);
  return builder.build(active_rows);
}

}  // namespace ccboost
