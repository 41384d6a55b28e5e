/*!
 * Copyright 2026 by ccboost Contributors
 * \file data_io.cc
 * \brief CSV parsing/writing and the synthetic data generators.
 */
#include "ccboost/data_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "ccboost/rng.h"

namespace ccboost {

namespace {

// Test rows draw from substream indices offset by 2^32 so train and test
// observations stay independent under one seed.
constexpr uint64_t kTestStreamOffset = 1ULL << 32;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(trim(line.substr(start)));
      return out;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double parse_cell(const std::string& cell, int line_no, int col_no) {
  auto fail = [&](const std::string& what) {
    throw DataError("line " + std::to_string(line_no) + ", column " +
                    std::to_string(col_no) + ": " + what);
  };
  if (cell.empty()) fail("missing cell");
  const char* begin = cell.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);  // accepts "+Inf" spellings
  if (end != begin + cell.size()) fail("cannot parse \"" + cell + "\"");
  return value;
}

void format_value(std::string& out, double value) {
  if (std::isinf(value)) {
    out += value > 0 ? "+Inf" : "-Inf";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  out += buf;
}

bool looks_numeric(const std::string& cell) {
  if (cell.empty()) return false;
  const char* begin = cell.c_str();
  char* end = nullptr;
  std::strtod(begin, &end);
  return end == begin + cell.size();
}

std::vector<int> default_label_columns(const LossSpec& loss, int total_cols) {
  if (loss.kind == LossKind::kAftNormal) {
    return {total_cols - 2, total_cols - 1};
  }
  return {total_cols - 1};
}

Matrix gaussian_features(int n, int p, uint64_t seed) {
  Matrix x(n, p);
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, RngPurpose::kFeature, static_cast<uint64_t>(i));
    for (int j = 0; j < p; ++j) x.at(i, j) = rng.normal();
  }
  return x;
}

Dataset take_rows(const Dataset& data, const std::vector<int>& rows) {
  Dataset out;
  out.features = Matrix(static_cast<int>(rows.size()), data.p());
  out.labels.reserve(rows.size());
  out.feature_names = data.feature_names;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < data.p(); ++j) {
      out.features.at(static_cast<int>(i), j) = data.features.at(rows[i], j);
    }
    out.labels.push_back(data.labels[rows[i]]);
  }
  return out;
}

}  // namespace

namespace {

struct RawCsv {
  std::vector<std::vector<std::string>> rows;
  std::vector<int> row_lines;  // 1-based file line per data row
  std::vector<std::string> header_cells;
  int cols = 0;
};

RawCsv read_raw_csv(const std::string& path, bool header) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open \"" + path + "\"");

  RawCsv raw;
  std::string line;
  int line_no = 0;
  size_t cols = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.size() >= 3 &&
        static_cast<unsigned char>(line[0]) == 0xEF) {
      line.erase(0, 3);  // UTF-8 BOM
    }
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_line(line);
    if (raw.rows.empty() && raw.header_cells.empty()) {
      cols = cells.size();
      if (header && !looks_numeric(cells[0])) {
        raw.header_cells = std::move(cells);
        continue;
      }
    }
    if (cells.size() != cols) {
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(cols) + " columns, got " +
                      std::to_string(cells.size()));
    }
    raw.rows.push_back(std::move(cells));
    raw.row_lines.push_back(line_no);
  }
  if (raw.rows.empty()) throw DataError("\"" + path + "\" has no data rows");
  raw.cols = static_cast<int>(cols);
  return raw;
}

}  // namespace

Dataset load_csv(const std::string& path, const LossSpec& loss,
                 const CsvLayout& layout) {
  RawCsv raw = read_raw_csv(path, layout.header);
  const std::vector<std::vector<std::string>>& rows = raw.rows;
  const std::vector<int>& row_lines = raw.row_lines;
  const std::vector<std::string>& header_cells = raw.header_cells;

  int total = raw.cols;
  std::vector<int> label_cols = layout.label_columns.empty()
                                    ? default_label_columns(loss, total)
                                    : layout.label_columns;
  size_t expected = loss.kind == LossKind::kAftNormal ? 2 : 1;
  if (label_cols.size() != expected) {
    throw UsageError("loss " + std::string(loss_kind_name(loss.kind)) +
                     " needs " + std::to_string(expected) +
                     " label column(s), got " +
                     std::to_string(label_cols.size()));
  }
  std::vector<bool> is_label(total, false);
  for (int c : label_cols) {
    if (c < 0 || c >= total) {
      throw UsageError("label column " + std::to_string(c) +
                       " out of range for " + std::to_string(total) +
                       " columns");
    }
    is_label[c] = true;
  }
  int p = total - static_cast<int>(label_cols.size());
  if (p < 1) throw DataError("\"" + path + "\" has no feature columns");

  Dataset data;
  data.features = Matrix(static_cast<int>(rows.size()), p);
  data.labels.reserve(rows.size());
  for (int c = 0; c < total; ++c) {
    if (is_label[c]) continue;
    data.feature_names.push_back(header_cells.empty()
                                     ? "x" + std::to_string(c)
                                     : header_cells[c]);
  }

  for (size_t i = 0; i < rows.size(); ++i) {
    int file_line = row_lines[i];
    int jj = 0;
    for (int c = 0; c < total; ++c) {
      if (is_label[c]) continue;
      double v = parse_cell(rows[i][c], file_line, c + 1);
      if (!std::isfinite(v)) {
        throw DataError("line " + std::to_string(file_line) + ", column " +
                        std::to_string(c + 1) + ": feature must be finite");
      }
      data.features.at(static_cast<int>(i), jj++) = v;
    }
    if (loss.kind == LossKind::kAftNormal) {
      double lo = parse_cell(rows[i][label_cols[0]], file_line,
                             label_cols[0] + 1);
      double hi = parse_cell(rows[i][label_cols[1]], file_line,
                             label_cols[1] + 1);
      data.labels.emplace_back(lo, hi);
    } else {
      data.labels.emplace_back(
          parse_cell(rows[i][label_cols[0]], file_line, label_cols[0] + 1));
    }
  }
  return data;
}

Matrix load_features_csv(const std::string& path, bool header) {
  RawCsv raw = read_raw_csv(path, header);
  Matrix x(static_cast<int>(raw.rows.size()), raw.cols);
  for (size_t i = 0; i < raw.rows.size(); ++i) {
    for (int j = 0; j < raw.cols; ++j) {
      double v = parse_cell(raw.rows[i][j], raw.row_lines[i], j + 1);
      if (!std::isfinite(v)) {
        throw DataError("line " + std::to_string(raw.row_lines[i]) +
                        ", column " + std::to_string(j + 1) +
                        ": feature must be finite");
      }
      x.at(static_cast<int>(i), j) = v;
    }
  }
  return x;
}

void save_csv(const std::string& path, const Dataset& data,
              const LossSpec& loss, bool header) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write \"" + path + "\"");

  std::string buf;
  if (header) {
    for (int j = 0; j < data.p(); ++j) {
      buf += data.feature_names.empty() ? "x" + std::to_string(j)
                                        : data.feature_names[j];
      buf += ',';
    }
    if (loss.kind == LossKind::kAftNormal) {
      buf += "t_lower,t_upper";
    } else {
      buf += "y";
    }
    buf += '\n';
  }
  for (int i = 0; i < data.n(); ++i) {
    for (int j = 0; j < data.p(); ++j) {
      format_value(buf, data.features.at(i, j));
      buf += ',';
    }
    if (loss.kind == LossKind::kAftNormal) {
      format_value(buf, data.labels[i].t_lower);
      buf += ',';
      format_value(buf, data.labels[i].t_upper);
    } else {
      format_value(buf, data.labels[i].y);
    }
    buf += '\n';
  }
  out << buf;
  if (!out) throw DataError("failed writing \"" + path + "\"");
}

RegressionSim gen_contaminated_regression(int n, int p, int n_outliers,
                                          double outlier_shift,
                                          double noise_sd, uint64_t seed) {
  if (n < 1 || p < 1) throw UsageError("gen: n and p must be >= 1");
  if (n_outliers < 0 || n_outliers >= n) {
    throw UsageError("gen: n_outliers must lie in [0, n)");
  }

  RegressionSim sim;
  sim.beta.resize(p);
  for (int j = 0; j < p; ++j) sim.beta[j] = 1.0 + j;

  sim.data.features = gaussian_features(n, p, seed);
  sim.data.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    double mean = 0.0;
    for (int j = 0; j < p; ++j) mean += sim.data.features.at(i, j) * sim.beta[j];
    Rng noise = Rng::stream(seed, RngPurpose::kNoise, static_cast<uint64_t>(i));
    sim.data.labels[i] = Label(mean + noise_sd * noise.normal());
  }

  Rng pick = Rng::stream(seed, RngPurpose::kOutlierPick);
  sim.outlier_rows = pick.sample_without_replacement(n, n_outliers);
  std::sort(sim.outlier_rows.begin(), sim.outlier_rows.end());
  for (int i : sim.outlier_rows) {
    sim.data.labels[i] = Label(sim.data.labels[i].y + outlier_shift);
  }
  return sim;
}

namespace {

/*! \brief One margin observation: 21 feature signs plus the clean label. */
void long_servedio_row(uint64_t seed, uint64_t index, double* x, double* y) {
  constexpr int kP = 21;
  double label =
      Rng::stream(seed, RngPurpose::kLabelSign, index).uniform() < 0.5 ? -1.0
                                                                       : 1.0;
  double u = Rng::stream(seed, RngPurpose::kSymbol, index).uniform();
  if (u < 0.25) {  // symbol A: full agreement
    for (int j = 0; j < kP; ++j) x[j] = label;
  } else if (u < 0.5) {  // symbol B: first 11 agree, last 10 disagree
    for (int j = 0; j < kP; ++j) x[j] = j < 11 ? label : -label;
  } else {  // symbol C: 5 of the first 11 and 6 of the last 10 agree
    Rng coord = Rng::stream(seed, RngPurpose::kCoord, index);
    for (int j = 0; j < kP; ++j) x[j] = -label;
    for (int j : coord.sample_without_replacement(11, 5)) x[j] = label;
    for (int j : coord.sample_without_replacement(10, 6)) x[11 + j] = label;
  }
  *y = label;
}

}  // namespace

std::pair<Dataset, Dataset> gen_long_servedio(int n_train, int n_test,
                                              double contamination,
                                              uint64_t seed) {
  if (n_train < 1 || n_test < 1) throw UsageError("gen: sizes must be >= 1");
  if (!(contamination >= 0.0 && contamination < 1.0)) {
    throw UsageError("gen: contamination must lie in [0, 1)");
  }
  constexpr int kP = 21;

  Dataset train;
  train.features = Matrix(n_train, kP);
  train.labels.resize(n_train);
  for (int i = 0; i < n_train; ++i) {
    double y;
    long_servedio_row(seed, static_cast<uint64_t>(i),
                      &train.features.at(i, 0), &y);
    double flip =
        Rng::stream(seed, RngPurpose::kFlip, static_cast<uint64_t>(i))
            .uniform();
    train.labels[i] = Label(flip < contamination ? -y : y);
  }

  Dataset test;
  test.features = Matrix(n_test, kP);
  test.labels.resize(n_test);
  for (int i = 0; i < n_test; ++i) {
    double y;
    long_servedio_row(seed, kTestStreamOffset + static_cast<uint64_t>(i),
                      &test.features.at(i, 0), &y);
    test.labels[i] = Label(y);
  }
  return {std::move(train), std::move(test)};
}

Dataset gen_gaussian_blobs(int n, int p, int num_class, double separation,
                           uint64_t seed) {
  if (n < 1 || p < 1) throw UsageError("gen: n and p must be >= 1");
  if (num_class < 2) throw UsageError("gen: num_class must be >= 2");
  if (!(separation >= 0.0)) throw UsageError("gen: separation must be >= 0");

  double step = separation / std::sqrt(static_cast<double>(p));
  Dataset data;
  data.features = gaussian_features(n, p, seed);
  data.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    uint64_t cls = Rng::stream(seed, RngPurpose::kClass, static_cast<uint64_t>(i))
                       .uniform_int(static_cast<uint64_t>(num_class));
    for (int j = 0; j < p; ++j) {
      data.features.at(i, j) += step * static_cast<double>(cls);
    }
    data.labels[i] = Label(static_cast<double>(cls));
  }
  return data;
}

Dataset gen_poisson_counts(int n, int p, uint64_t seed) {
  if (n < 1 || p < 1) throw UsageError("gen: n and p must be >= 1");
  Dataset data;
  data.features = gaussian_features(n, p, seed);
  data.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    double eta = 0.5;
    for (int j = 0; j < p; ++j) {
      double beta = 0.4 * (static_cast<double>(j % 3) - 1.0);
      eta += data.features.at(i, j) * beta;
    }
    eta = std::clamp(eta, -3.0, 3.0);
    Rng draw = Rng::stream(seed, RngPurpose::kCount, static_cast<uint64_t>(i));
    data.labels[i] =
        Label(static_cast<double>(draw.poisson(std::exp(eta))));
  }
  return data;
}

SurvivalSim gen_lognormal_survival(int n, int p, double censor_frac,
                                   int n_outliers, double outlier_factor,
                                   uint64_t seed) {
  if (n < 1 || p < 1) throw UsageError("gen: n and p must be >= 1");
  if (!(censor_frac >= 0.0 && censor_frac < 1.0)) {
    throw UsageError("gen: censor_frac must lie in [0, 1)");
  }
  if (n_outliers < 0 || n_outliers >= n) {
    throw UsageError("gen: n_outliers must lie in [0, n)");
  }
  if (!(outlier_factor > 0.0)) {
    throw UsageError("gen: outlier_factor must be > 0");
  }

  SurvivalSim sim;
  sim.clean.features = gaussian_features(n, p, seed);
  sim.clean.labels.resize(n);
  std::vector<int> uncensored;
  for (int i = 0; i < n; ++i) {
    double mean = 0.0;
    for (int j = 0; j < p; ++j) {
      double beta = (j % 2 == 0) ? 0.5 : -0.5;
      mean += sim.clean.features.at(i, j) * beta;
    }
    Rng tdraw = Rng::stream(seed, RngPurpose::kSurvTime,
                            static_cast<uint64_t>(i));
    double t = std::exp(mean + 0.5 * tdraw.normal());
    Rng cdraw = Rng::stream(seed, RngPurpose::kCensor,
                            static_cast<uint64_t>(i));
    if (cdraw.uniform() < censor_frac) {
      // Censor strictly before the event, at a uniform fraction of it.
      double c = t * (0.3 + 0.7 * cdraw.uniform());
      sim.clean.labels[i] =
          Label(c, std::numeric_limits<double>::infinity());
    } else {
      sim.clean.labels[i] = Label(t, t);
      uncensored.push_back(i);
    }
  }

  if (n_outliers > static_cast<int>(uncensored.size())) {
    throw UsageError("gen: not enough uncensored rows for n_outliers");
  }
  Rng pick = Rng::stream(seed, RngPurpose::kOutlierPick);
  std::vector<int> chosen =
      pick.sample_without_replacement(static_cast<int>(uncensored.size()),
                                      n_outliers);
  for (int c : chosen) sim.outlier_rows.push_back(uncensored[c]);
  std::sort(sim.outlier_rows.begin(), sim.outlier_rows.end());

  sim.data = sim.clean;
  for (int i : sim.outlier_rows) {
    double t = sim.clean.labels[i].t_lower * outlier_factor;
    sim.data.labels[i] = Label(t, t);
  }
  return sim;
}

std::pair<Dataset, Dataset> train_test_split(const Dataset& data,
                                             double fraction, uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw UsageError("split: fraction must lie in (0, 1)");
  }
  int n_train = static_cast<int>(std::llround(fraction * data.n()));
  if (n_train < 1 || n_train >= data.n()) {
    throw DataError("split: a side would be empty");
  }
  Rng rng = Rng::stream(seed, RngPurpose::kSplitPerm);
  std::vector<int> perm = rng.permutation(data.n());
  std::vector<int> train_rows(perm.begin(), perm.begin() + n_train);
  std::vector<int> test_rows(perm.begin() + n_train, perm.end());
  return {take_rows(data, train_rows), take_rows(data, test_rows)};
}

}  // namespace ccboost
