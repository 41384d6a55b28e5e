/*!
 * Copyright 2026 by ccboost Contributors
 * \file cli.cc
 * \brief Subcommands: train, predict, weights, importance, simulate, eval.
 */
#include "ccboost/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ccboost/data_io.h"
#include "ccboost/irco.h"
#include "ccboost/metrics.h"
#include "ccboost/model_io.h"

namespace ccboost {

namespace {

struct Options {
  std::string data_path;
  std::string model_path = "model.ccboost.json";
  std::string out_path = "-";
  std::string weights_out, trace_out;
  bool no_header = false;
  bool no_label = false;
  std::vector<int> label_cols;

  std::string loss_name;
  int num_class = 2;
  double tweedie_power = 1.5;
  double aft_scale = 1.0;

  std::string cfun;
  double sigma = 1.0;
  double delta = 0.0;

  BoostConfig boost;
  double base_score = 0.0;  // tracked via flag presence
  bool base_score_set = false;

  int outer_k = 10;
  double tol = 1e-6;
  std::string mode = "refit";

  int top_k = 4;
  bool transform = false;
  bool dump_trees = false;
  std::string iteration_range;

  // simulate
  std::string kind;
  int n = 200, p = 5, ntr = 400, nte = 200;
  int n_outliers = 0, classes = 3;
  double shift = 50.0, noise_sd = 1.0, percon = 0.1;
  double separation = 4.0, censor_frac = 0.3, outlier_factor = 100.0;
  uint64_t seed = 0;
  std::string out_prefix = "sim";
};

LossSpec make_loss_spec(const Options& opt) {
  LossSpec spec;
  spec.kind = parse_loss_kind(opt.loss_name);
  spec.num_class = opt.num_class;
  spec.tweedie_power = opt.tweedie_power;
  spec.aft_scale = opt.aft_scale;
  validate_loss_spec(spec);
  return spec;
}

ConcaveSpec make_concave_spec(const Options& opt) {
  ConcaveSpec spec;
  spec.kind = parse_concave_kind(opt.cfun);
  spec.sigma = opt.sigma;
  spec.delta = opt.delta;
  return spec;
}

CsvLayout make_layout(const Options& opt) {
  CsvLayout layout;
  layout.header = !opt.no_header;
  layout.label_columns = opt.label_cols;
  return layout;
}

/*! \brief Replace the model document extension with a derived suffix. */
std::string derive_path(const std::string& model_path, const char* suffix) {
  std::string base = model_path;
  for (const char* ext : {".ccboost.json", ".json"}) {
    if (base.size() > std::string(ext).size() && base.ends_with(ext)) {
      base.resize(base.size() - std::string(ext).size());
      break;
    }
  }
  return base + suffix;
}

/*! \brief Write to the named file, or stdout when path is "-". */
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DataError("cannot write \"" + path + "\"");
  out << text;
  if (!out) throw DataError("failed writing \"" + path + "\"");
}

std::string fmt(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::pair<int, int> parse_iteration_range(const std::string& text,
                                          int rounds) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError("--iteration-range expects begin:end");
  }
  try {
    int begin = std::stoi(text.substr(0, colon));
    int end = std::stoi(text.substr(colon + 1));
    return {begin, end};
  } catch (const std::exception&) {
    throw UsageError("--iteration-range expects begin:end integers");
  }
  (void)rounds;
}

/*! \brief Response mapping per loss for --transform. */
void apply_transform(const LossSpec& loss, std::vector<double>& scores) {
  switch (loss.kind) {
    case LossKind::kLogisticMargin:
      for (double& s : scores) s = 1.0 / (1.0 + std::exp(-s));
      return;
    case LossKind::kPoisson:
    case LossKind::kGammaDeviance:
    case LossKind::kTweedie:
    case LossKind::kAftNormal:
      for (double& s : scores) s = std::exp(s);
      return;
    case LossKind::kMultinomial: {
      int k = loss.num_class;
      for (size_t i = 0; i + k <= scores.size(); i += k) {
        double m = scores[i];
        for (int c = 1; c < k; ++c) m = std::max(m, scores[i + c]);
        double sum = 0.0;
        for (int c = 0; c < k; ++c) {
          scores[i + c] = std::exp(scores[i + c] - m);
          sum += scores[i + c];
        }
        for (int c = 0; c < k; ++c) scores[i + c] /= sum;
      }
      return;
    }
    case LossKind::kSquared:
    case LossKind::kHingeMargin:
      return;  // raw scores are the natural scale
  }
}

int cmd_train(const Options& opt) {
  LossSpec loss = make_loss_spec(opt);
  ConcaveSpec cc = make_concave_spec(opt);
  Dataset data = load_csv(opt.data_path, loss, make_layout(opt));

  BoostConfig boost = opt.boost;
  if (opt.base_score_set) boost.base_score = opt.base_score;
  IrcoConfig irco;
  irco.outer_iterations = opt.outer_k;
  irco.tolerance = opt.tol;
  irco.mode = parse_irco_mode(opt.mode);

  IrcoResult result = irboost(data, loss, cc, boost, irco);
  save_result(opt.model_path, result, data.feature_names);

  std::string weights_path = opt.weights_out.empty()
                                 ? derive_path(opt.model_path, ".weights.csv")
                                 : opt.weights_out;
  std::string weights_csv = "index,weight\n";
  for (size_t i = 0; i < result.weight_update.size(); ++i) {
    weights_csv += std::to_string(i) + "," + fmt(result.weight_update[i]) +
                   "\n";
  }
  emit(weights_path, weights_csv);

  std::string trace_path = opt.trace_out.empty()
                               ? derive_path(opt.model_path, ".rho.csv")
                               : opt.trace_out;
  std::string trace_csv = "iteration,rho\n";
  for (size_t k = 0; k < result.rho_trace.size(); ++k) {
    trace_csv += std::to_string(k) + "," + fmt(result.rho_trace[k]) + "\n";
  }
  emit(trace_path, trace_csv);

  std::vector<int> order(result.weight_update.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return result.weight_update[a] < result.weight_update[b];
  });
  int k = std::min<int>(opt.top_k, static_cast<int>(order.size()));

  std::cout << "rho_final: " << fmt(result.rho_trace.back()) << "\n"
            << "niter: " << result.niter << "\n";
  std::cout << "smallest_weights:";
  for (int i = 0; i < k; ++i) std::cout << " " << order[i];
  std::cout << "\n"
            << "model: " << opt.model_path << "\n"
            << "weights: " << weights_path << "\n"
            << "trace: " << trace_path << "\n";
  return 0;
}

Matrix load_prediction_features(const Options& opt, const LossSpec& loss) {
  if (opt.no_label) {
    return load_features_csv(opt.data_path, !opt.no_header);
  }
  return load_csv(opt.data_path, loss, make_layout(opt)).features;
}

int cmd_predict(const Options& opt) {
  LoadedResult loaded = load_result(opt.model_path);
  const BoosterModel& model = loaded.result.model;
  Matrix features = load_prediction_features(opt, model.loss);

  int begin = 0, end = model.round_count();
  if (!opt.iteration_range.empty()) {
    std::tie(begin, end) =
        parse_iteration_range(opt.iteration_range, model.round_count());
  }
  std::vector<double> scores = predict_scores(model, features, begin, end);
  if (opt.transform) apply_transform(model.loss, scores);

  int width = model.score_width();
  std::string csv;
  if (width == 1) {
    csv = "pred\n";
  } else {
    for (int c = 0; c < width; ++c) {
      csv += (c ? "," : "") + std::string("pred_") + std::to_string(c);
    }
    csv += "\n";
  }
  for (int i = 0; i < features.rows(); ++i) {
    for (int c = 0; c < width; ++c) {
      if (c) csv += ",";
      csv += fmt(scores[static_cast<size_t>(i) * width + c]);
    }
    csv += "\n";
  }
  emit(opt.out_path, csv);
  return 0;
}

int cmd_weights(const Options& opt) {
  LoadedResult loaded = load_result(opt.model_path);
  const IrcoResult& result = loaded.result;
  Concave cc = Concave::validate(result.concave);

  std::vector<double> weights;
  if (opt.data_path.empty()) {
    weights = result.weight_update;
  } else {
    Dataset data = load_csv(opt.data_path, result.model.loss, make_layout(opt));
    weights = weight_snapshot(result.model, data, result.model.loss, cc,
                              result.shift_c);
  }
  std::string csv = "index,weight\n";
  for (size_t i = 0; i < weights.size(); ++i) {
    csv += std::to_string(i) + "," + fmt(weights[i]) + "\n";
  }
  emit(opt.out_path, csv);
  return 0;
}

int cmd_importance(const Options& opt) {
  LoadedResult loaded = load_result(opt.model_path);
  const BoosterModel& model = loaded.result.model;

  std::vector<std::pair<int, double>> importance = feature_importance(model);
  double total = 0.0;
  for (const auto& [feature, gain] : importance) total += gain;

  std::string csv = "feature,gain,share\n";
  for (const auto& [feature, gain] : importance) {
    if (gain <= 0.0) continue;
    std::string name =
        feature < static_cast<int>(loaded.feature_names.size())
            ? loaded.feature_names[feature]
            : "x" + std::to_string(feature);
    csv += name + "," + fmt(gain) + "," + fmt(gain / total) + "\n";
  }
  emit(opt.out_path, csv);
  if (opt.dump_trees) {
    std::cout << tree_dump(model, loaded.feature_names);
  }
  return 0;
}

int cmd_eval(const Options& opt) {
  LoadedResult loaded = load_result(opt.model_path);
  const BoosterModel& model = loaded.result.model;
  Dataset data = load_csv(opt.data_path, model.loss, make_layout(opt));
  for (int i = 0; i < data.n(); ++i) {
    validate_label(model.loss, data.labels[i], i);
  }
  std::vector<double> scores = predict_scores(model, data.features);

  std::ostringstream out;
  switch (model.loss.kind) {
    case LossKind::kSquared:
      out << "mse: " << mse(scores, data.labels) << "\n"
          << "mae: " << mae(scores, data.labels) << "\n";
      break;
    case LossKind::kLogisticMargin:
    case LossKind::kHingeMargin:
      out << "misclassification: "
          << misclassification_margin(scores, data.labels) << "\n";
      break;
    case LossKind::kMultinomial:
      out << "misclassification: "
          << misclassification_argmax(scores, model.loss.num_class,
                                      data.labels)
          << "\n";
      break;
    case LossKind::kPoisson:
      out << "mean_poisson_deviance: "
          << mean_poisson_deviance(scores, data.labels) << "\n";
      break;
    case LossKind::kGammaDeviance:
    case LossKind::kTweedie: {
      // Response-scale accuracy for the log-link families.
      std::vector<double> response = scores;
      for (double& s : response) s = std::exp(s);
      out << "mse: " << mse(response, data.labels) << "\n"
          << "mae: " << mae(response, data.labels) << "\n";
      break;
    }
    case LossKind::kAftNormal:
      out << "concordance: " << concordance_index(scores, data.labels)
          << "\n";
      break;
  }
  std::cout << out.str();
  return 0;
}

int cmd_simulate(const Options& opt) {
  auto outlier_file = [&](const std::vector<int>& rows) {
    std::string csv = "index\n";
    for (int r : rows) csv += std::to_string(r) + "\n";
    emit(opt.out_prefix + "_outliers.csv", csv);
  };

  if (opt.kind == "regression") {
    RegressionSim sim =
        gen_contaminated_regression(opt.n, opt.p, opt.n_outliers, opt.shift,
                                    opt.noise_sd, opt.seed);
    LossSpec loss;
    save_csv(opt.out_prefix + ".csv", sim.data, loss);
    outlier_file(sim.outlier_rows);
    std::cout << "wrote " << opt.out_prefix << ".csv (" << sim.data.n()
              << " x " << sim.data.p() << ")\n";
    return 0;
  }
  if (opt.kind == "longservedio") {
    auto [train, test] =
        gen_long_servedio(opt.ntr, opt.nte, opt.percon, opt.seed);
    LossSpec loss;
    loss.kind = LossKind::kLogisticMargin;
    save_csv(opt.out_prefix + "_train.csv", train, loss);
    save_csv(opt.out_prefix + "_test.csv", test, loss);
    std::cout << "wrote " << opt.out_prefix << "_train.csv (" << train.n()
              << " x " << train.p() << "), " << opt.out_prefix
              << "_test.csv (" << test.n() << " x " << test.p() << ")\n";
    return 0;
  }
  if (opt.kind == "blobs") {
    Dataset data = gen_gaussian_blobs(opt.n, opt.p, opt.classes,
                                      opt.separation, opt.seed);
    LossSpec loss;
    loss.kind = LossKind::kMultinomial;
    loss.num_class = opt.classes;
    save_csv(opt.out_prefix + ".csv", data, loss);
    std::cout << "wrote " << opt.out_prefix << ".csv (" << data.n() << " x "
              << data.p() << ")\n";
    return 0;
  }
  if (opt.kind == "poisson") {
    Dataset data = gen_poisson_counts(opt.n, opt.p, opt.seed);
    LossSpec loss;
    loss.kind = LossKind::kPoisson;
    save_csv(opt.out_prefix + ".csv", data, loss);
    std::cout << "wrote " << opt.out_prefix << ".csv (" << data.n() << " x "
              << data.p() << ")\n";
    return 0;
  }
  if (opt.kind == "survival") {
    SurvivalSim sim =
        gen_lognormal_survival(opt.n, opt.p, opt.censor_frac, opt.n_outliers,
                               opt.outlier_factor, opt.seed);
    LossSpec loss;
    loss.kind = LossKind::kAftNormal;
    save_csv(opt.out_prefix + ".csv", sim.data, loss);
    save_csv(opt.out_prefix + "_clean.csv", sim.clean, loss);
    outlier_file(sim.outlier_rows);
    std::cout << "wrote " << opt.out_prefix << ".csv, " << opt.out_prefix
              << "_clean.csv (" << sim.data.n() << " x " << sim.data.p()
              << ")\n";
    return 0;
  }
  throw UsageError("unknown --kind \"" + opt.kind +
                   "\"; expected regression, longservedio, blobs, poisson, "
                   "or survival");
}

void add_input_flags(CLI::App* cmd, Options& opt, bool required_data = true) {
  auto* data = cmd->add_option("--data", opt.data_path, "input CSV path");
  if (required_data) data->required();
  cmd->add_flag("--no-header", opt.no_header, "CSV has no header row");
  cmd->add_option("--label-col", opt.label_cols,
                  "0-based label column(s); default: last (last two for "
                  "survival:aft)");
}

void add_loss_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--loss", opt.loss_name,
                  "loss: reg:squarederror, binary:logitraw, binary:hinge, "
                  "count:poisson, reg:gamma, reg:tweedie, multi:softprob, "
                  "survival:aft")
      ->required();
  cmd->add_option("--num-class", opt.num_class, "classes for multi:softprob");
  cmd->add_option("--tweedie-power", opt.tweedie_power,
                  "tweedie variance power in (1, 2)");
  cmd->add_option("--aft-scale", opt.aft_scale, "AFT scale rho > 0");
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"ccboost: robust boosting with concave-convex losses"};
  app.require_subcommand(1);

  CLI::App* train = app.add_subcommand(
      "train", "fit a robust model; writes model, weights, and rho trace");
  add_input_flags(train, opt);
  add_loss_flags(train, opt);
  train->add_option("--cfun", opt.cfun,
                    "concave component: hcave, acave, bcave, ccave, dcave, "
                    "ecave, gcave, tcave")
      ->required();
  train->add_option("--s", opt.sigma, "robustness parameter sigma");
  train->add_option("--delta", opt.delta, "ecave auxiliary delta");
  train->add_option("--nrounds", opt.boost.nrounds, "boosting rounds per fit");
  train->add_option("--max-depth", opt.boost.max_depth,
                    "tree depth in edges; 0 = single leaf");
  train->add_option("--eta", opt.boost.learning_rate, "shrinkage in (0, 1]");
  train->add_option("--lambda", opt.boost.reg_lambda, "L2 leaf penalty");
  train->add_option("--alpha", opt.boost.reg_alpha, "L1 leaf penalty");
  train->add_option("--gamma", opt.boost.gamma, "minimum split gain");
  train->add_option("--subsample", opt.boost.subsample,
                    "per-round row fraction in (0, 1]");
  train->add_option("--min-child-hessian", opt.boost.min_child_hessian,
                    "minimum child hessian sum");
  train->add_option("--seed", opt.boost.seed, "subsampling seed");
  train->add_option("--base-score", opt.base_score,
                    "override the initial constant score")
      ->each([&](const std::string&) { opt.base_score_set = true; });
  train->add_option("--K", opt.outer_k, "outer reweighting iterations");
  train->add_option("--tol", opt.tol, "relative rho decrease for early stop");
  train->add_option("--mode", opt.mode, "refit or continue");
  train->add_option("--model-out", opt.model_path, "model document path");
  train->add_option("--weights-out", opt.weights_out, "weights CSV path");
  train->add_option("--trace-out", opt.trace_out, "rho trace CSV path");
  train->add_option("--top-k", opt.top_k,
                    "how many smallest weights to print");
  train->callback([&] { cmd_train(opt); });

  CLI::App* predict =
      app.add_subcommand("predict", "write scores for a dataset");
  add_input_flags(predict, opt);
  predict->add_option("--model", opt.model_path, "model document")->required();
  predict->add_option("--out", opt.out_path, "output CSV path or -");
  predict->add_flag("--transform", opt.transform,
                    "apply the response mapping (sigmoid/softmax/exp)");
  predict->add_option("--iteration-range", opt.iteration_range,
                      "rounds begin:end (end exclusive)");
  predict->add_flag("--no-label", opt.no_label,
                    "data CSV has feature columns only");
  predict->callback([&] { cmd_predict(opt); });

  CLI::App* weights = app.add_subcommand(
      "weights", "robustness weights of a model on a dataset");
  add_input_flags(weights, opt, false);
  weights->add_option("--model", opt.model_path, "model document")->required();
  weights->add_option("--out", opt.out_path, "output CSV path or -");
  weights->callback([&] { cmd_weights(opt); });

  CLI::App* importance =
      app.add_subcommand("importance", "per-feature total split gain");
  importance->add_option("--model", opt.model_path, "model document")
      ->required();
  importance->add_option("--out", opt.out_path, "output CSV path or -");
  importance->add_flag("--dump-trees", opt.dump_trees,
                       "print the tree structure");
  importance->callback([&] { cmd_importance(opt); });

  CLI::App* simulate =
      app.add_subcommand("simulate", "write a synthetic dataset");
  simulate->add_option("--kind", opt.kind,
                       "regression, longservedio, blobs, poisson, survival")
      ->required();
  simulate->add_option("--out", opt.out_prefix, "output path prefix");
  simulate->add_option("--seed", opt.seed, "generator seed");
  simulate->add_option("--n", opt.n, "rows");
  simulate->add_option("--p", opt.p, "features");
  simulate->add_option("--ntr", opt.ntr, "training rows (longservedio)");
  simulate->add_option("--nte", opt.nte, "test rows (longservedio)");
  simulate->add_option("--percon", opt.percon,
                       "label contamination in [0, 1) (longservedio)");
  simulate->add_option("--n-outliers", opt.n_outliers, "outliers to inject");
  simulate->add_option("--shift", opt.shift, "response shift (regression)");
  simulate->add_option("--noise-sd", opt.noise_sd, "noise sd (regression)");
  simulate->add_option("--classes", opt.classes, "class count (blobs)");
  simulate->add_option("--separation", opt.separation,
                       "center spacing (blobs)");
  simulate->add_option("--censor-frac", opt.censor_frac,
                       "right-censoring fraction (survival)");
  simulate->add_option("--outlier-factor", opt.outlier_factor,
                       "time inflation factor (survival)");
  simulate->callback([&] { cmd_simulate(opt); });

  CLI::App* eval = app.add_subcommand("eval", "loss-appropriate metrics");
  add_input_flags(eval, opt);
  eval->add_option("--model", opt.model_path, "model document")->required();
  eval->callback([&] { cmd_eval(opt); });

  std::vector<const char*> argv;
  argv.push_back("ccboost");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ccboost
