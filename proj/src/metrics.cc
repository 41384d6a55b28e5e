/*!
 * Copyright 2026 by ccboost Contributors
 * \file metrics.cc
 * \brief Metric implementations.
 */
#include "ccboost/metrics.h"

#include <cmath>
#include <string>

namespace ccboost {

namespace {

void check_sizes(size_t pred, size_t labels, const char* what) {
  if (pred != labels) {
    throw DataError(std::string(what) + ": " + std::to_string(pred) +
                    " predictions vs " + std::to_string(labels) + " labels");
  }
}

}  // namespace

double mse(const std::vector<double>& pred, const std::vector<Label>& labels) {
  check_sizes(pred.size(), labels.size(), "mse");
  double sum = 0.0;
  for (size_t i = 0; i < pred.size(); ++i) {
    double r = pred[i] - labels[i].y;
    sum += r * r;
  }
  return sum / static_cast<double>(pred.size());
}

double mae(const std::vector<double>& pred, const std::vector<Label>& labels) {
  check_sizes(pred.size(), labels.size(), "mae");
  double sum = 0.0;
  for (size_t i = 0; i < pred.size(); ++i) {
    sum += std::abs(pred[i] - labels[i].y);
  }
  return sum / static_cast<double>(pred.size());
}

double misclassification_margin(const std::vector<double>& scores,
                                const std::vector<Label>& labels) {
  check_sizes(scores.size(), labels.size(), "misclassification");
  int errors = 0;
  for (size_t i = 0; i < scores.size(); ++i) {
    double sign = scores[i] > 0.0 ? 1.0 : (scores[i] < 0.0 ? -1.0 : 0.0);
    if (sign != labels[i].y) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(scores.size());
}

double misclassification_argmax(const std::vector<double>& scores,
                                int num_class,
                                const std::vector<Label>& labels) {
  check_sizes(scores.size(), labels.size() * num_class, "misclassification");
  int errors = 0;
  for (size_t i = 0; i < labels.size(); ++i) {
    const double* row = scores.data() + i * num_class;
    int best = 0;
    for (int c = 1; c < num_class; ++c) {
      if (row[c] > row[best]) best = c;
    }
    if (best != static_cast<int>(labels[i].y)) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(labels.size());
}

double mean_poisson_deviance(const std::vector<double>& scores,
                             const std::vector<Label>& labels) {
  check_sizes(scores.size(), labels.size(), "poisson deviance");
  LossSpec spec;
  spec.kind = LossKind::kPoisson;
  double sum = 0.0;
  for (size_t i = 0; i < scores.size(); ++i) {
    sum += 2.0 * (raw_loss(spec, labels[i], &scores[i]) -
                  saturated_value(spec, labels[i]));
  }
  return sum / static_cast<double>(scores.size());
}

double concordance_index(const std::vector<double>& scores,
                         const std::vector<Label>& labels) {
  check_sizes(scores.size(), labels.size(), "concordance");
  auto is_event = [](const Label& l) {
    return l.t_lower == l.t_upper && std::isfinite(l.t_upper);
  };
  double comparable = 0.0, concordant = 0.0;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!is_event(labels[i])) continue;
    for (size_t j = 0; j < labels.size(); ++j) {
      if (i == j || !(labels[i].t_lower < labels[j].t_lower)) continue;
      comparable += 1.0;
      if (scores[i] < scores[j]) {
        concordant += 1.0;
      } else if (scores[i] == scores[j]) {
        concordant += 0.5;
      }
    }
  }
  if (comparable == 0.0) {
    throw DataError("concordance: no comparable pairs");
  }
  return concordant / comparable;
}

}  // namespace ccboost
