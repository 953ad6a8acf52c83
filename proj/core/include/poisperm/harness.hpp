// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "poisperm/grid.hpp"
#include "poisperm/scenarios.hpp"
#include "poisperm/seed_path.hpp"

namespace poisperm {

enum class Method { wald, permutation };

std::string to_string(Method method);

struct MethodSet {
  bool wald = true;
  bool permutation = true;
};

/// Per (scenario, n, method) rejection-rate estimate with its binomial
/// confidence band. Failed original fits count as non-rejections, so the
/// denominator stays K; they are reported in n_failed.
struct TypeIErrorEstimate {
  ScenarioSpec scenario;
  long long n = 0;
  Method method = Method::wald;
  long long K = 0;
  int n_perm = 0;  // 0 for the Wald rows
  long long rejections = 0;
  double rate = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double alpha = 0.05;
  long long n_failed = 0;
};

struct BiasRecord {
  long long n = 0;
  long long replicate = 0;
  double bias = 0.0;  // lambda_hat - lambda
};

/// Fit-count bookkeeping for the run manifest. The identity
/// attempted + skipped = K * (1 + N_perm * [permutation enabled]) per
/// setting holds by construction; succeeded() = attempted - failed.
struct WorkloadStats {
  std::uint64_t fits_attempted = 0;
  std::uint64_t fits_failed = 0;
  std::uint64_t fits_skipped = 0;

  [[nodiscard]] std::uint64_t succeeded() const {
    return fits_attempted - fits_failed;
  }
};

struct ExperimentConfig {
  long long replicates = 1000;  // K
  int n_perm = 1000;
  double alpha = 0.05;
  MethodSet methods{};
  std::uint64_t master_seed = 0;
  int threads = 0;  // 0 = hardware concurrency
};

struct TypeIExperimentResult {
  std::vector<TypeIErrorEstimate> estimates;
  WorkloadStats workload;
};

/// Fraction of p-values strictly below alpha.
double type1_rate(const std::vector<double>& p_values, double alpha);

/// alpha +/- 2 sqrt(alpha (1-alpha) / K), clamped to [0, 1].
std::pair<double, double> binomial_band(long long K, double alpha);

/// Monte Carlo sweep over the size grid: K replicate datasets per size,
/// each analyzed by the enabled methods. Replicates and permutations are
/// scheduled by SeedPath, so results are identical at any worker count.
/// Estimates are ordered by size, Wald row before permutation row.
TypeIExperimentResult run_type1_experiment(const ScenarioSpec& spec,
                                           const SizeGrid& grid,
                                           const ExperimentConfig& config);

/// Censored-measurement bias study: per (size, replicate), the bias of
/// the plug-in rate estimate on censored Poisson data.
std::vector<BiasRecord> run_bias_experiment(double lambda, long long threshold,
                                            const SizeGrid& grid,
                                            long long replicates,
                                            std::uint64_t master_seed,
                                            int threads = 0);

/// Centered moving average over the points sorted by x; endpoints use
/// truncated windows. window must be odd and >= 1.
std::vector<std::pair<double, double>> smooth_rates(
    std::vector<std::pair<double, double>> points, int window);

}  // namespace poisperm
