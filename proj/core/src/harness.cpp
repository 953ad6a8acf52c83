// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "poisperm/glm.hpp"
#include "poisperm/parallel.hpp"
#include "poisperm/permtest.hpp"

namespace poisperm {

std::string to_string(Method method) {
  return method == Method::wald ? "wald" : "permutation";
}

double type1_rate(const std::vector<double>& p_values, double alpha) {
  if (p_values.empty()) {
    throw std::invalid_argument("type1_rate: empty p-value vector");
  }
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("type1_rate: alpha must lie in (0,1)");
  }
  long long rejections = 0;
  for (double p : p_values) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
      throw std::invalid_argument("type1_rate: p-values must lie in [0,1]");
    }
    if (p < alpha) ++rejections;  // strictly below: p == alpha keeps the null
  }
  return static_cast<double>(rejections) / static_cast<double>(p_values.size());
}

std::pair<double, double> binomial_band(long long K, double alpha) {
  if (K < 1) throw std::invalid_argument("binomial_band: K must be >= 1");
  const double half =
      2.0 * std::sqrt(alpha * (1.0 - alpha) / static_cast<double>(K));
  return {std::max(0.0, alpha - half), std::min(1.0, alpha + half)};
}

namespace {

struct ReplicateOutcome {
  bool orig_ok = false;
  bool wald_reject = false;
  bool perm_ok = false;
  bool perm_reject = false;
  std::uint32_t fits_attempted = 0;
  std::uint32_t fits_failed = 0;
  std::uint32_t fits_skipped = 0;
};

}  // namespace

TypeIExperimentResult run_type1_experiment(const ScenarioSpec& spec,
                                           const SizeGrid& grid,
                                           const ExperimentConfig& config) {
  if (grid.sizes.empty()) {
    throw std::invalid_argument("run_type1_experiment: empty grid");
  }
  if (config.replicates < 1) {
    throw std::invalid_argument("run_type1_experiment: K must be >= 1");
  }
  if (config.methods.permutation && config.n_perm < 1) {
    throw std::invalid_argument("run_type1_experiment: N_perm must be >= 1");
  }
  if (!config.methods.wald && !config.methods.permutation) {
    throw std::invalid_argument("run_type1_experiment: no method enabled");
  }

  const std::size_t K = static_cast<std::size_t>(config.replicates);
  const std::size_t total = grid.sizes.size() * K;
  std::vector<ReplicateOutcome> slots(total);

  parallel_for(total, config.threads, [&](std::size_t idx) {
    const std::size_t size_index = idx / K;
    const std::size_t replicate = idx % K;
    const long long n = grid.sizes[size_index];
    const SeedPath path{config.master_seed, spec.scenario_id(),
                        static_cast<std::int32_t>(size_index),
                        static_cast<std::int32_t>(replicate), -1};
    ReplicateOutcome& out = slots[idx];

    const Dataset data = generate(spec, static_cast<std::size_t>(n), path);
    const FitResult fit =
        fit_poisson(DesignMatrix::with_predictor(data.x1), data.y);
    out.fits_attempted = 1;
    out.orig_ok = fit.ok();
    if (!out.orig_ok) {
      out.fits_failed = 1;
      if (config.methods.permutation) {
        out.fits_skipped = static_cast<std::uint32_t>(config.n_perm);
      }
      return;
    }
    if (config.methods.wald) {
      out.wald_reject = wald_pvalue(fit, 1).p_value < config.alpha;
    }
    if (config.methods.permutation) {
      PermutationOptions opts;
      opts.threads = 1;  // outer loop owns the parallelism
      out.fits_attempted += static_cast<std::uint32_t>(config.n_perm);
      try {
        const PermutationResult perm =
            permutation_pvalue(data, fit, config.n_perm, path, opts);
        out.perm_ok = true;
        out.perm_reject = perm.p_value < config.alpha;
        out.fits_failed += static_cast<std::uint32_t>(perm.n_failed_fits);
      } catch (const std::runtime_error&) {
        // every permuted fit failed
        out.perm_ok = false;
        out.fits_failed += static_cast<std::uint32_t>(config.n_perm);
      }
    }
  });

  TypeIExperimentResult result;
  const auto [ci_lo, ci_hi] = binomial_band(config.replicates, config.alpha);
  for (std::size_t size_index = 0; size_index < grid.sizes.size(); ++size_index) {
    long long wald_rejections = 0;
    long long perm_rejections = 0;
    long long orig_failures = 0;
    long long perm_failures = 0;
    for (std::size_t k = 0; k < K; ++k) {
      const ReplicateOutcome& out = slots[size_index * K + k];
      result.workload.fits_attempted += out.fits_attempted;
      result.workload.fits_failed += out.fits_failed;
      result.workload.fits_skipped += out.fits_skipped;
      if (!out.orig_ok) {
        ++orig_failures;
        ++perm_failures;
        continue;  // failed fits are non-rejections; denominator stays K
      }
      if (out.wald_reject) ++wald_rejections;
      if (config.methods.permutation && !out.perm_ok) {
        ++perm_failures;
      } else if (out.perm_reject) {
        ++perm_rejections;
      }
    }

    auto push = [&](Method method, long long rejections, long long failures) {
      TypeIErrorEstimate e;
      e.scenario = spec;
      e.n = grid.sizes[size_index];
      e.method = method;
      e.K = config.replicates;
      e.n_perm = method == Method::permutation ? config.n_perm : 0;
      e.rejections = rejections;
      e.rate = static_cast<double>(rejections) /
               static_cast<double>(config.replicates);
      e.ci_lo = ci_lo;
      e.ci_hi = ci_hi;
      e.alpha = config.alpha;
      e.n_failed = failures;
      result.estimates.push_back(e);
    };
    if (config.methods.wald) push(Method::wald, wald_rejections, orig_failures);
    if (config.methods.permutation) {
      push(Method::permutation, perm_rejections, perm_failures);
    }
  }
  return result;
}

std::vector<BiasRecord> run_bias_experiment(double lambda, long long threshold,
                                            const SizeGrid& grid,
                                            long long replicates,
                                            std::uint64_t master_seed,
                                            int threads) {
  if (grid.sizes.empty()) {
    throw std::invalid_argument("run_bias_experiment: empty grid");
  }
  if (replicates < 1) {
    throw std::invalid_argument("run_bias_experiment: replicates must be >= 1");
  }
  const ScenarioSpec spec = ScenarioSpec::censored_poisson(lambda, threshold);
  const std::size_t K = static_cast<std::size_t>(replicates);
  std::vector<BiasRecord> records(grid.sizes.size() * K);

  parallel_for(records.size(), threads, [&](std::size_t idx) {
    const std::size_t size_index = idx / K;
    const std::size_t replicate = idx % K;
    const long long n = grid.sizes[size_index];
    const SeedPath path{master_seed, spec.scenario_id(),
                        static_cast<std::int32_t>(size_index),
                        static_cast<std::int32_t>(replicate), -1};
    const std::vector<double> y = gen_censored_poisson(
        lambda, threshold, static_cast<std::size_t>(n), path);
    records[idx] = {n, static_cast<long long>(replicate),
                    estimate_lambda(y) - lambda};
  });
  return records;
}

std::vector<std::pair<double, double>> smooth_rates(
    std::vector<std::pair<double, double>> points, int window) {
  if (window < 1 || window % 2 == 0) {
    throw std::invalid_argument("smooth_rates: window must be odd and >= 1");
  }
  std::sort(points.begin(), points.end());
  const int half = window / 2;
  const int count = static_cast<int>(points.size());
  std::vector<std::pair<double, double>> out(points.size());
  for (int i = 0; i < count; ++i) {
    const int lo = std::max(0, i - half);
    const int hi = std::min(count - 1, i + half);
    double sum = 0.0;
    for (int j = lo; j <= hi; ++j) sum += points[j].second;
    out[i] = {points[i].first, sum / (hi - lo + 1)};
  }
  return out;
}

}  // namespace poisperm
