/*!
 * Copyright 2026 by ccboost Contributors
 * \file model_io.h
 * \brief Lossless JSON model documents and the human-readable tree dump.
 */
#ifndef CCBOOST_MODEL_IO_H_
#define CCBOOST_MODEL_IO_H_

#include <string>
#include <vector>

#include "ccboost/irco.h"

namespace ccboost {

/*!
 * \brief Serialize the booster alone (loss, config, base score, trees).
 *
 * Doubles keep their shortest round-trip decimal form, so equal models have
 * byte-identical serializations and loading is lossless.
 */
std::string booster_to_json(const BoosterModel& model);
BoosterModel booster_from_json(const std::string& text);

/*!
 * \brief Full model document: booster plus concave spec, outer-loop config,
 * weight_update, rho_trace, niter, shift constant, and feature names.
 */
std::string result_to_json(const IrcoResult& result,
                           const std::vector<std::string>& feature_names = {});

struct LoadedResult {
  IrcoResult result;
  std::vector<std::string> feature_names;
};

LoadedResult result_from_json(const std::string& text);

void save_result(const std::string& path, const IrcoResult& result,
                 const std::vector<std::string>& feature_names = {});
LoadedResult load_result(const std::string& path);

/*! \brief One node per line, indented two spaces per tree level. */
std::string tree_dump(const BoosterModel& model,
                      const std::vector<std::string>& feature_names = {});

}  // namespace ccboost

#endif  // CCBOOST_MODEL_IO_H_
