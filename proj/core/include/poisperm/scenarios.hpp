// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "poisperm/dataset.hpp"
#include "poisperm/samplers.hpp"
#include "poisperm/seed_path.hpp"

namespace poisperm {

enum class ScenarioKind {
  null_poisson,      // well-specified baseline, beta1 = 0
  misspecified_f,    // outcome is a rounded F(d1,d2) variate
  omitted_predictor, // outcome driven by a hidden second predictor
  censored_poisson,  // counts below a threshold recorded as 0
};

std::string to_string(ScenarioKind kind);

/// Which generating process to simulate, with its parameters. Fields that
/// do not apply to `kind` are ignored. Use the factory functions.
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::null_poisson;
  double beta0 = 0.0;            // null_poisson, omitted_predictor
  double beta2 = 0.0;            // omitted_predictor
  FParams f_params{};            // misspecified_f
  double lambda = 0.0;           // censored_poisson
  long long censor_threshold = 0;  // censored_poisson

  static ScenarioSpec null_poisson(double beta0);
  static ScenarioSpec misspecified_f(FParams params = {8, 8});
  static ScenarioSpec omitted_predictor(double beta0, double beta2);
  static ScenarioSpec censored_poisson(double lambda, long long threshold);

  /// Stable stream coordinate for SeedPath::scenario_id.
  [[nodiscard]] std::int32_t scenario_id() const {
    return static_cast<std::int32_t>(kind);
  }

  /// Compact `key=value;...` rendering of the parameters that apply.
  [[nodiscard]] std::string params_string() const;
};

/// Calibration baseline: x1 ~ N(0,1), y ~ Poisson(e^beta0), independent.
Dataset gen_null(const ScenarioSpec& spec, std::size_t n, const SeedPath& seed);

/// Misspecified outcome: y = round(F(d1,d2) variate), x1 ~ N(0,1).
Dataset gen_scenario1(const FParams& params, std::size_t n, const SeedPath& seed);
Dataset gen_scenario1(std::size_t n, const SeedPath& seed);

/// Omitted predictor: x1, x2 ~ N(0,1); y ~ Poisson(e^{beta0 + beta2 x2}).
/// x2 is kept only in Dataset::x2_hidden.
Dataset gen_scenario2(const ScenarioSpec& spec, std::size_t n, const SeedPath& seed);

/// Poisson(lambda) counts with every value below `threshold` recorded as 0.
std::vector<double> gen_censored_poisson(double lambda, long long threshold,
                                         std::size_t n, const SeedPath& seed);

/// Sample mean of a count vector.
double estimate_lambda(const std::vector<double>& y);

/// Dispatch on spec.kind for the three regression scenarios. The censored
/// process has no predictor and is rejected here.
Dataset generate(const ScenarioSpec& spec, std::size_t n, const SeedPath& seed);

}  // namespace poisperm
