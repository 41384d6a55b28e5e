/*!
 * Copyright 2026 by ccboost Contributors
 * \file data.h
 * \brief Dense feature matrix, per-observation labels, dataset container.
 */
#ifndef CCBOOST_DATA_H_
#define CCBOOST_DATA_H_

#include <cstddef>
#include <string>
#include <vector>

namespace ccboost {

/*! \brief Dense row-major n x p matrix of feature values. */
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0.0) {}

  double& at(int i, int j) { return data_[idx(i, j)]; }
  double at(int i, int j) const { return data_[idx(i, j)]; }
  const double* row(int i) const { return data_.data() + idx(i, 0); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool operator==(const Matrix& other) const = default;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) +
           static_cast<size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/*!
 * \brief Per-observation target.
 *
 * Scalar losses read y (class index for the multinomial loss, the margin
 * labels use -1/+1).  The AFT loss reads the censoring interval
 * [t_lower, t_upper]; t_lower == t_upper is an exact event time and
 * t_upper == +inf a right-censored one.  Scalar constructors keep the
 * interval in sync so survival metrics can read either view.
 */
struct Label {
  Label() = default;
  explicit Label(double value) : y(value), t_lower(value), t_upper(value) {}
  Label(double lower, double upper) : y(lower), t_lower(lower), t_upper(upper) {}

  double y = 0.0;
  double t_lower = 0.0;
  double t_upper = 0.0;

  bool operator==(const Label& other) const = default;
};

struct Dataset {
  Matrix features;
  std::vector<Label> labels;
  std::vector<std::string> feature_names;  // may be empty

  int n() const { return features.rows(); }
  int p() const { return features.cols(); }
};

}  // namespace ccboost

#endif  // CCBOOST_DATA_H_
