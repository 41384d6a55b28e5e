/*!
 * Copyright 2026 by ccboost Contributors
 * \file tree.h
 * \brief Regression trees grown by exact greedy Newton split search.
 */
#ifndef CCBOOST_TREE_H_
#define CCBOOST_TREE_H_

#include <optional>
#include <vector>

#include "ccboost/common.h"
#include "ccboost/data.h"

namespace ccboost {

/*! \brief Per-tree growing parameters (subset of BoostConfig). */
struct TreeParams {
  double reg_lambda = 1.0;
  double reg_alpha = 0.0;
  double gamma = 0.0;
  int max_depth = 6;        // counted in edges; 0 forces a single leaf
  double min_child_hessian = 0.0;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;  // leaf value before shrinkage
  double gain = 0.0;   // split gain, feeds feature importance

  bool is_leaf() const { return feature < 0; }
  bool operator==(const TreeNode& other) const = default;
};

/*! \brief Binary tree over feature thresholds; node 0 is the root. */
struct RegressionTree {
  std::vector<TreeNode> nodes;

  double predict_row(const double* x) const {
    int i = 0;
    while (!nodes[i].is_leaf()) {
      i = x[nodes[i].feature] < nodes[i].threshold ? nodes[i].left
                                                   : nodes[i].right;
    }
    return nodes[i].value;
  }

  bool operator==(const RegressionTree& other) const = default;
};

/*! \brief Soft threshold T_a(g): g shrunk toward 0 by a, clipped at 0. */
inline double soft_threshold(double g, double alpha) {
  if (g > alpha) return g - alpha;
  if (g < -alpha) return g + alpha;
  return 0.0;
}

/*! \brief Penalized Newton leaf value -T_a(G) / (H + lambda); 0 when H + lambda = 0. */
inline double leaf_weight(double g_sum, double h_sum, double reg_lambda,
                          double reg_alpha) {
  double denom = h_sum + reg_lambda;
  if (!(denom > 0.0)) return 0.0;
  return -soft_threshold(g_sum, reg_alpha) / denom;
}

struct BestSplit {
  double threshold = 0.0;
  double gain = 0.0;
  std::vector<int> left_rows;  // indices into the input arrays
};

/*!
 * \brief Exact greedy scan of one feature.
 *
 * Candidate thresholds are midpoints between distinct consecutive sorted
 * values; gain is 1/2 [score(L) + score(R) - score(parent)] - gamma with
 * score(G, H) = T_alpha(G)^2 / (H + lambda).  Returns the max-gain candidate
 * with gain > 0, preferring the smallest threshold on ties, or nullopt.
 */
std::optional<BestSplit> best_split(const std::vector<double>& feature_values,
                                    const std::vector<double>& grad,
                                    const std::vector<double>& hess,
                                    double reg_lambda, double reg_alpha,
                                    double gamma);

/*!
 * \brief Grow one tree on the active rows by recursive exact greedy search.
 *
 * grad/hess/weights are indexed by absolute row id and are NOT pre-multiplied:
 * sums accumulate weight * grad via exact products so that integer case
 * weights reproduce replicated rows bit for bit.  Rows with zero weight are
 * dropped up front; they neither contribute to sums nor generate candidate
 * thresholds.  Split ties break toward the lowest feature index, then the
 * smallest threshold.  Feature scans may run on thread_budget() threads;
 * reduction follows fixed feature order, so results do not depend on the
 * thread count.
 */
RegressionTree fit_tree(const Matrix& features,
                        const std::vector<int>& active_rows,
                        const std::vector<double>& grad,
                        const std::vector<double>& hess,
                        const std::vector<double>& weights,
                        const TreeParams& params);

}  // namespace ccboost

#endif  // CCBOOST_TREE_H_
