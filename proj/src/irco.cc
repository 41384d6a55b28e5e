/*!
 * Copyright 2026 by ccboost Contributors
 * \file irco.cc
 * \brief MM outer loop: weights from the concave component, weighted refits.
 */
#include "ccboost/irco.h"

#include <cmath>
#include <iostream>
#include <string>

namespace ccboost {

namespace {

/*! \brief Shifted losses z_i = raw_loss_i - C at the model's scores. */
std::vector<double> shifted_losses(const BoosterModel& model,
                                   const Dataset& data, const LossSpec& loss,
                                   double shift_c) {
  std::vector<double> scores = predict_scores(model, data.features);
  const int width = loss.score_width();
  std::vector<double> z(data.n());
  for (int i = 0; i < data.n(); ++i) {
    double raw =
        raw_loss(loss, data.labels[i], &scores[static_cast<size_t>(i) * width]);
    if (!std::isfinite(raw)) {
      throw NumericError("irboost: non-finite loss at observation " +
                         std::to_string(i));
    }
    // The shift guarantees z >= 0 mathematically; rounding can leave dust.
    z[i] = std::max(raw - shift_c, 0.0);
  }
  return z;
}

}  // namespace

const char* irco_mode_name(IrcoConfig::Mode mode) {
  return mode == IrcoConfig::Mode::kRefit ? "refit" : "continue";
}

IrcoConfig::Mode parse_irco_mode(const std::string& name) {
  if (name == "refit") return IrcoConfig::Mode::kRefit;
  if (name == "continue") return IrcoConfig::Mode::kContinue;
  throw UsageError("unknown mode \"" + name + "\"; expected refit or continue");
}

double objective_rho(const BoosterModel& model, const Dataset& data,
                     const LossSpec& loss, const Concave& cc, double shift_c) {
  std::vector<double> z = shifted_losses(model, data, loss, shift_c);
  Acc2 rho;
  for (double zi : z) rho.add(cc.value(zi));
  double value = rho.value();
  if (!std::isfinite(value)) {
    throw NumericError("irboost: non-finite objective rho");
  }
  return value;
}

std::vector<double> weight_snapshot(const BoosterModel& model,
                                    const Dataset& data, const LossSpec& loss,
                                    const Concave& cc, double shift_c) {
  std::vector<double> z = shifted_losses(model, data, loss, shift_c);
  std::vector<double> w(z.size());
  for (size_t i = 0; i < z.size(); ++i) w[i] = cc.weight(z[i]);
  return w;
}

IrcoResult irboost(const Dataset& data, const LossSpec& loss,
                   const ConcaveSpec& cc, const BoostConfig& boost,
                   const IrcoConfig& irco) {
  if (irco.outer_iterations < 1) throw UsageError("K must be >= 1");
  if (!(irco.tolerance >= 0.0)) throw UsageError("tol must be >= 0");
  Concave concave = Concave::validate(cc);
  validate_loss_spec(loss);
  if (data.n() < 1) throw DataError("irboost: empty dataset");
  for (int i = 0; i < data.n(); ++i) validate_label(loss, data.labels[i], i);

  IrcoResult result;
  result.concave = concave.spec();
  result.irco = irco;
  result.shift_c = shift_constant(loss, data.labels);

  std::vector<double> unit(data.n(), 1.0);
  result.model = fit_boosted(data, unit, loss, boost);
  result.niter = boost.nrounds;
  result.rho_trace.push_back(
      objective_rho(result.model, data, loss, concave, result.shift_c));

  for (int k = 1; k <= irco.outer_iterations; ++k) {
    std::vector<double> w =
        weight_snapshot(result.model, data, loss, concave, result.shift_c);
    BoosterModel next =
        irco.mode == IrcoConfig::Mode::kRefit
            ? fit_boosted(data, w, loss, boost)
            : fit_boosted(data, w, loss, boost, &result.model);
    result.niter += boost.nrounds;

    double rho_prev = result.rho_trace.back();
    double rho_k = objective_rho(next, data, loss, concave, result.shift_c);
    result.model = std::move(next);
    result.rho_trace.push_back(rho_k);

    double increase = rho_k - rho_prev;
    if (increase > 1e-6 * std::max(1.0, std::abs(rho_prev))) {
      throw NumericError(
          "irboost: rho increased from " + std::to_string(rho_prev) + " to " +
          std::to_string(rho_k) + " at outer iteration " + std::to_string(k) +
          " (inner solver underfit or bug)");
    }
    if (increase > 0.0) {
      std::cerr << "irboost: warning: rho increased by " << increase
                << " at outer iteration " << k << "\n";
    }

    double rel_decrease =
        (rho_prev - rho_k) / std::max(rho_prev, 1e-12);
    if (rel_decrease < irco.tolerance) break;
  }

  result.weight_update =
      weight_snapshot(result.model, data, loss, concave, result.shift_c);
  return result;
}

}  // namespace ccboost
