/*!
 * Copyright 2026 by ccboost Contributors
 * \file test_cli.cc
 * \brief End-to-end command flows through the in-process CLI entry point.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccboost/cc_family.h"
#include "ccboost/cli.h"
#include "ccboost/model_io.h"

using namespace ccboost;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/*! \brief Parse "index,value" CSV rows, skipping the header. */
std::vector<double> read_indexed_csv(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> values;
  while (std::getline(in, line)) {
    size_t comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  return values;
}

std::vector<int> read_index_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);  // header
  std::vector<int> rows;
  while (std::getline(in, line)) rows.push_back(std::stoi(line));
  return rows;
}

/*! \brief Track and clean up every file a test creates. */
struct Workspace {
  ~Workspace() {
    for (const std::string& f : files) std::remove(f.c_str());
  }
  std::string add(const std::string& name) {
    files.push_back("tmp_cli_" + name);
    return files.back();
  }
  std::vector<std::string> files;
};

}  // namespace

TEST_CASE("regression flow: simulate, train, predict, importance, eval") {
  Workspace ws;
  std::string prefix = ws.add("reg");
  std::string data = prefix + ".csv";
  ws.files.push_back(data);
  ws.files.push_back(prefix + "_outliers.csv");
  CHECK(run_cli({"simulate", "--kind", "regression", "--out", prefix,
                 "--seed", "3", "--n", "150", "--p", "3", "--n-outliers", "4",
                 "--shift", "50", "--noise-sd", "1"}) == 0);

  std::string model = ws.add("reg_model.json");
  std::string weights = ws.add("reg_weights.csv");
  std::string trace = ws.add("reg_trace.csv");
  CHECK(run_cli({"train", "--data", data, "--loss", "reg:squarederror",
                 "--cfun", "bcave", "--s", "10", "--nrounds", "100", "--eta",
                 "0.1", "--max-depth", "2", "--K", "1", "--model-out", model,
                 "--weights-out", weights, "--trace-out", trace}) == 0);

  // the model document reloads and remembers the concave component
  LoadedResult loaded = load_result(model);
  CHECK(loaded.result.concave.kind == ConcaveKind::kBcave);
  CHECK(loaded.result.concave.sigma == 10.0);
  CHECK(loaded.result.model.round_count() == 100);

  // weights: one per row, header included; outliers separate cleanly
  std::string weights_text = read_file(weights);
  CHECK(weights_text.rfind("index,weight", 0) == 0);
  std::vector<double> w = read_indexed_csv(weights);
  REQUIRE(w.size() == 150);
  std::vector<int> outliers = read_index_file(prefix + "_outliers.csv");
  REQUIRE(outliers.size() == 4);
  double worst_outlier = 0.0, best_inlier = 2.0;
  std::set<int> outlier_set(outliers.begin(), outliers.end());
  for (int i = 0; i < 150; ++i) {
    if (outlier_set.count(i)) {
      worst_outlier = std::max(worst_outlier, w[i]);
    } else {
      best_inlier = std::min(best_inlier, w[i]);
    }
  }
  CHECK(worst_outlier < best_inlier);

  // the rho trace has the header and never increases
  std::vector<double> rho = read_indexed_csv(trace);
  REQUIRE(rho.size() >= 2);
  for (size_t k = 1; k < rho.size(); ++k) {
    CHECK(rho[k] <= rho[k - 1] + 1e-9);
  }

  std::string preds = ws.add("reg_preds.csv");
  CHECK(run_cli({"predict", "--model", model, "--data", data, "--out",
                 preds}) == 0);
  std::vector<double> scores;
  {
    std::ifstream in(preds);
    std::string line;
    std::getline(in, line);
    CHECK(line == "pred");
    while (std::getline(in, line)) scores.push_back(std::stod(line));
  }
  CHECK(scores.size() == 150);

  // an empty iteration range yields the constant base score
  std::string base_preds = ws.add("reg_base.csv");
  CHECK(run_cli({"predict", "--model", model, "--data", data, "--out",
                 base_preds, "--iteration-range", "0:0"}) == 0);
  std::vector<double> base;
  {
    std::ifstream in(base_preds);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) base.push_back(std::stod(line));
  }
  REQUIRE(base.size() == 150);
  for (double b : base) CHECK(b == base[0]);

  std::string gains = ws.add("reg_gains.csv");
  CHECK(run_cli({"importance", "--model", model, "--out", gains}) == 0);
  CHECK(read_file(gains).rfind("feature,gain,share", 0) == 0);

  CHECK(run_cli({"eval", "--model", model, "--data", data}) == 0);
}

TEST_CASE("margin flow with transformed predictions") {
  Workspace ws;
  std::string prefix = ws.add("ls");
  std::string train_csv = prefix + "_train.csv";
  std::string test_csv = prefix + "_test.csv";
  ws.files.push_back(train_csv);
  ws.files.push_back(test_csv);
  CHECK(run_cli({"simulate", "--kind", "longservedio", "--out", prefix,
                 "--seed", "2", "--ntr", "120", "--nte", "60", "--percon",
                 "0.1"}) == 0);

  std::string model = ws.add("ls_model.json");
  CHECK(run_cli({"train", "--data", train_csv, "--loss", "binary:logitraw",
                 "--cfun", "acave", "--s", "1", "--nrounds", "20",
                 "--max-depth", "3", "--eta", "0.1", "--K", "2", "--mode",
                 "continue", "--model-out", model}) == 0);

  std::string probs = ws.add("ls_probs.csv");
  CHECK(run_cli({"predict", "--model", model, "--data", test_csv, "--out",
                 probs, "--transform"}) == 0);
  std::ifstream in(probs);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    double p = std::stod(line);
    CHECK(p > 0.0);
    CHECK(p < 1.0);
  }

  CHECK(run_cli({"eval", "--model", model, "--data", test_csv}) == 0);
}

TEST_CASE("weights subcommand rescoring a dataset") {
  Workspace ws;
  std::string prefix = ws.add("wreg");
  std::string data = prefix + ".csv";
  ws.files.push_back(data);
  ws.files.push_back(prefix + "_outliers.csv");
  CHECK(run_cli({"simulate", "--kind", "regression", "--out", prefix,
                 "--seed", "5", "--n", "60", "--p", "3"}) == 0);

  std::string model = ws.add("wreg_model.json");
  std::string weights = ws.add("wreg_w.csv");
  std::string trace = ws.add("wreg_t.csv");
  CHECK(run_cli({"train", "--data", data, "--loss", "reg:squarederror",
                 "--cfun", "ccave", "--s", "2", "--nrounds", "20", "--K", "1",
                 "--model-out", model, "--weights-out", weights,
                 "--trace-out", trace}) == 0);

  // re-deriving weights on the training data matches the stored snapshot
  std::string rescored = ws.add("wreg_rescore.csv");
  CHECK(run_cli({"weights", "--model", model, "--data", data, "--out",
                 rescored}) == 0);
  CHECK(read_file(rescored) == read_file(weights));

  // without --data the stored weights are echoed
  std::string echoed = ws.add("wreg_echo.csv");
  CHECK(run_cli({"weights", "--model", model, "--out", echoed}) == 0);
  CHECK(read_file(echoed) == read_file(weights));
}

TEST_CASE("predict accepts feature-only files with --no-label") {
  Workspace ws;
  std::string prefix = ws.add("nl");
  std::string data = prefix + ".csv";
  ws.files.push_back(data);
  ws.files.push_back(prefix + "_outliers.csv");
  CHECK(run_cli({"simulate", "--kind", "regression", "--out", prefix,
                 "--seed", "7", "--n", "40", "--p", "2"}) == 0);
  std::string model = ws.add("nl_model.json");
  std::string w = ws.add("nl_w.csv");
  std::string t = ws.add("nl_t.csv");
  CHECK(run_cli({"train", "--data", data, "--loss", "reg:squarederror",
                 "--cfun", "hcave", "--s", "2", "--nrounds", "10", "--K", "1",
                 "--model-out", model, "--weights-out", w, "--trace-out",
                 t}) == 0);

  std::string feats = ws.add("nl_feats.csv");
  {
    std::ofstream out(feats);
    out << "x0,x1\n0.1,-0.4\n1.2,0.3\n";
  }
  std::string preds = ws.add("nl_preds.csv");
  CHECK(run_cli({"predict", "--model", model, "--data", feats, "--out", preds,
                 "--no-label"}) == 0);
  std::ifstream in(preds);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli({"train", "--bogus-flag"}) == 1);
  CHECK(run_cli({"no-such-command"}) == 1);
  Workspace ws;
  std::string prefix = ws.add("ue");
  std::string data = prefix + ".csv";
  ws.files.push_back(data);
  ws.files.push_back(prefix + "_outliers.csv");
  CHECK(run_cli({"simulate", "--kind", "regression", "--out", prefix,
                 "--seed", "1", "--n", "30", "--p", "2"}) == 0);
  CHECK(run_cli({"train", "--data", data, "--loss", "reg:absolute", "--cfun",
                 "ccave"}) == 1);
  CHECK(run_cli({"train", "--data", data, "--loss", "reg:squarederror",
                 "--cfun", "zcave"}) == 1);
  CHECK(run_cli({"train", "--data", data, "--loss", "reg:squarederror",
                 "--cfun", "ccave", "--s", "-1"}) == 1);
  CHECK(run_cli({"train", "--data", data, "--loss", "reg:squarederror",
                 "--cfun", "ccave", "--eta", "0"}) == 1);
  CHECK(run_cli({"train", "--data", data, "--loss", "reg:squarederror",
                 "--cfun", "ccave", "--mode", "sometimes"}) == 1);
  CHECK(run_cli({"simulate", "--kind", "mystery", "--out", prefix}) == 1);
}

TEST_CASE("data errors exit with 2") {
  CHECK(run_cli({"train", "--data", "no_such_file.csv", "--loss",
                 "reg:squarederror", "--cfun", "ccave"}) == 2);
  CHECK(run_cli({"predict", "--model", "no_such_model.json", "--data",
                 "also_missing.csv"}) == 2);

  Workspace ws;
  std::string bad = ws.add("bad.csv");
  {
    std::ofstream out(bad);
    out << "x0,y\n0.1,1\n0.2,weird\n";
  }
  CHECK(run_cli({"train", "--data", bad, "--loss", "reg:squarederror",
                 "--cfun", "ccave"}) == 2);

  // valid CSV, wrong label domain for the loss
  std::string dom = ws.add("dom.csv");
  {
    std::ofstream out(dom);
    out << "x0,y\n0.1,1\n0.2,3\n";
  }
  CHECK(run_cli({"train", "--data", dom, "--loss", "binary:logitraw",
                 "--cfun", "ccave"}) == 2);
}
