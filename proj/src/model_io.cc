/*!
 * Copyright 2026 by ccboost Contributors
 * \file model_io.cc
 * \brief JSON (de)serialization of models and results.
 */
#include "ccboost/model_io.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ccboost {

namespace {

using nlohmann::json;

json loss_to_json(const LossSpec& spec) {
  json j;
  j["name"] = loss_kind_name(spec.kind);
  if (spec.kind == LossKind::kMultinomial) j["num_class"] = spec.num_class;
  if (spec.kind == LossKind::kTweedie) j["tweedie_power"] = spec.tweedie_power;
  if (spec.kind == LossKind::kAftNormal) j["aft_scale"] = spec.aft_scale;
  return j;
}

LossSpec loss_from_json(const json& j) {
  LossSpec spec;
  spec.kind = parse_loss_kind(j.at("name").get<std::string>());
  if (j.contains("num_class")) spec.num_class = j["num_class"].get<int>();
  if (j.contains("tweedie_power")) {
    spec.tweedie_power = j["tweedie_power"].get<double>();
  }
  if (j.contains("aft_scale")) spec.aft_scale = j["aft_scale"].get<double>();
  validate_loss_spec(spec);
  return spec;
}

json config_to_json(const BoostConfig& config) {
  json j;
  j["nrounds"] = config.nrounds;
  j["eta"] = config.learning_rate;
  j["lambda"] = config.reg_lambda;
  j["alpha"] = config.reg_alpha;
  j["gamma"] = config.gamma;
  j["max_depth"] = config.max_depth;
  j["min_child_hessian"] = config.min_child_hessian;
  j["subsample"] = config.subsample;
  j["seed"] = config.seed;
  if (config.base_score) j["base_score"] = *config.base_score;
  return j;
}

BoostConfig config_from_json(const json& j) {
  BoostConfig config;
  config.nrounds = j.at("nrounds").get<int>();
  config.learning_rate = j.at("eta").get<double>();
  config.reg_lambda = j.at("lambda").get<double>();
  config.reg_alpha = j.at("alpha").get<double>();
  config.gamma = j.at("gamma").get<double>();
  config.max_depth = j.at("max_depth").get<int>();
  config.min_child_hessian = j.at("min_child_hessian").get<double>();
  config.subsample = j.at("subsample").get<double>();
  config.seed = j.at("seed").get<uint64_t>();
  if (j.contains("base_score")) {
    config.base_score = j["base_score"].get<double>();
  }
  return config;
}

json tree_to_json(const RegressionTree& tree) {
  json nodes = json::array();
  for (const TreeNode& n : tree.nodes) {
    json node;
    node["feature"] = n.feature;
    node["left"] = n.left;
    node["right"] = n.right;
    if (n.is_leaf()) {
      node["value"] = n.value;
    } else {
      node["threshold"] = n.threshold;
      node["gain"] = n.gain;
    }
    nodes.push_back(std::move(node));
  }
  return json{{"nodes", std::move(nodes)}};
}

RegressionTree tree_from_json(const json& j) {
  RegressionTree tree;
  for (const json& node : j.at("nodes")) {
    TreeNode n;
    n.feature = node.at("feature").get<int>();
    n.left = node.at("left").get<int>();
    n.right = node.at("right").get<int>();
    if (n.is_leaf()) {
      n.value = node.at("value").get<double>();
    } else {
      n.threshold = node.at("threshold").get<double>();
      n.gain = node.at("gain").get<double>();
    }
    tree.nodes.push_back(n);
  }
  if (tree.nodes.empty()) throw DataError("model document: empty tree");
  return tree;
}

json booster_to_json_value(const BoosterModel& model) {
  json j;
  j["loss"] = loss_to_json(model.loss);
  j["config"] = config_to_json(model.config);
  j["base_score"] = model.base_score;
  j["feature_count"] = model.feature_count;
  j["round_count"] = model.round_count();
  json trees = json::array();
  for (const RegressionTree& tree : model.trees) {
    trees.push_back(tree_to_json(tree));
  }
  j["trees"] = std::move(trees);
  return j;
}

BoosterModel booster_from_json_value(const json& j) {
  BoosterModel model;
  model.loss = loss_from_json(j.at("loss"));
  model.config = config_from_json(j.at("config"));
  model.base_score = j.at("base_score").get<std::vector<double>>();
  model.feature_count = j.at("feature_count").get<int>();
  for (const json& tree : j.at("trees")) {
    model.trees.push_back(tree_from_json(tree));
  }
  if (model.base_score.size() !=
      static_cast<size_t>(model.loss.score_width())) {
    throw DataError("model document: base_score width mismatch");
  }
  if (model.round_count() * model.score_width() !=
      static_cast<int>(model.trees.size())) {
    throw DataError("model document: tree count not a multiple of classes");
  }
  return model;
}

json concave_to_json(const ConcaveSpec& spec) {
  json j;
  j["kind"] = concave_kind_name(spec.kind);
  j["sigma"] = spec.sigma;
  j["delta"] = spec.delta;
  return j;
}

ConcaveSpec concave_from_json(const json& j) {
  ConcaveSpec spec;
  spec.kind = parse_concave_kind(j.at("kind").get<std::string>());
  spec.sigma = j.at("sigma").get<double>();
  spec.delta = j.at("delta").get<double>();
  return spec;
}

json parse_document(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw DataError(std::string(what) + ": invalid JSON");
  }
  return j;
}

}  // namespace

std::string booster_to_json(const BoosterModel& model) {
  return booster_to_json_value(model).dump(2) + "\n";
}

BoosterModel booster_from_json(const std::string& text) {
  try {
    return booster_from_json_value(parse_document(text, "booster document"));
  } catch (const json::exception& e) {
    throw DataError(std::string("booster document: ") + e.what());
  }
}

std::string result_to_json(const IrcoResult& result,
                           const std::vector<std::string>& feature_names) {
  json j;
  j["format"] = "ccboost";
  j["version"] = 1;
  j["booster"] = booster_to_json_value(result.model);
  j["concave"] = concave_to_json(result.concave);
  j["irco"] = json{{"outer_iterations", result.irco.outer_iterations},
                   {"tolerance", result.irco.tolerance},
                   {"mode", irco_mode_name(result.irco.mode)}};
  j["shift_c"] = result.shift_c;
  j["niter"] = result.niter;
  j["rho_trace"] = result.rho_trace;
  j["weight_update"] = result.weight_update;
  j["feature_names"] = feature_names;
  return j.dump(2) + "\n";
}

LoadedResult result_from_json(const std::string& text) {
  try {
    json j = parse_document(text, "model document");
    if (j.value("format", "") != "ccboost") {
      throw DataError("model document: missing format tag \"ccboost\"");
    }
    LoadedResult out;
    out.result.model = booster_from_json_value(j.at("booster"));
    out.result.concave = concave_from_json(j.at("concave"));
    const json& irco = j.at("irco");
    out.result.irco.outer_iterations = irco.at("outer_iterations").get<int>();
    out.result.irco.tolerance = irco.at("tolerance").get<double>();
    out.result.irco.mode =
        parse_irco_mode(irco.at("mode").get<std::string>());
    out.result.shift_c = j.at("shift_c").get<double>();
    out.result.niter = j.at("niter").get<long long>();
    out.result.rho_trace = j.at("rho_trace").get<std::vector<double>>();
    out.result.weight_update =
        j.at("weight_update").get<std::vector<double>>();
    out.feature_names =
        j.value("feature_names", std::vector<std::string>{});
    return out;
  } catch (const json::exception& e) {
    throw DataError(std::string("model document: ") + e.what());
  }
}

void save_result(const std::string& path, const IrcoResult& result,
                 const std::vector<std::string>& feature_names) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write \"" + path + "\"");
  out << result_to_json(result, feature_names);
  if (!out) throw DataError("failed writing \"" + path + "\"");
}

LoadedResult load_result(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return result_from_json(buf.str());
}

std::string tree_dump(const BoosterModel& model,
                      const std::vector<std::string>& feature_names) {
  auto feature_label = [&](int j) {
    if (j < static_cast<int>(feature_names.size())) return feature_names[j];
    return "x" + std::to_string(j);
  };
  std::ostringstream out;
  char buf[64];
  for (size_t t = 0; t < model.trees.size(); ++t) {
    out << "tree " << t << ":\n";
    const RegressionTree& tree = model.trees[t];
    // Preorder walk with explicit depth; children printed left then right.
    std::vector<std::pair<int, int>> stack{{0, 1}};
    while (!stack.empty()) {
      auto [node, depth] = stack.back();
      stack.pop_back();
      const TreeNode& n = tree.nodes[node];
      out << std::string(static_cast<size_t>(depth) * 2, ' ');
      if (n.is_leaf()) {
        std::snprintf(buf, sizeof(buf), "leaf=%.6g", n.value);
        out << buf << "\n";
      } else {
        std::snprintf(buf, sizeof(buf), " < %.6g] gain=%.6g", n.threshold,
                      n.gain);
        out << "[" << feature_label(n.feature) << buf << "\n";
        stack.emplace_back(n.right, depth + 1);
        stack.emplace_back(n.left, depth + 1);
      }
    }
  }
  return out.str();
}

}  // namespace ccboost
