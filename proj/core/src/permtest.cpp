// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/permtest.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "poisperm/parallel.hpp"
#include "poisperm/rng.hpp"

namespace poisperm {

std::vector<double> shuffle(const std::vector<double>& x, const SeedPath& seed) {
  if (x.empty()) throw std::invalid_argument("shuffle: empty vector");
  std::vector<double> out = x;
  StreamRng rng(seed);
  for (std::size_t i = out.size() - 1; i > 0; --i) {
    const std::size_t j = rng.uniform_below(i + 1);
    std::swap(out[i], out[j]);
  }
  return out;
}

PermutationResult permutation_pvalue(const Dataset& data, int n_perms,
                                     const SeedPath& seed,
                                     const PermutationOptions& options) {
  if (data.y.size() != data.x1.size()) {
    throw std::invalid_argument("permutation_pvalue: y and x1 lengths differ");
  }
  const FitResult original =
      fit_poisson(DesignMatrix::with_predictor(data.x1), data.y, options.fit);
  return permutation_pvalue(data, original, n_perms, seed, options);
}

PermutationResult permutation_pvalue(const Dataset& data,
                                     const FitResult& original, int n_perms,
                                     const SeedPath& seed,
                                     const PermutationOptions& options) {
  if (n_perms < 1) {
    throw std::invalid_argument("permutation_pvalue: N must be >= 1");
  }
  if (data.y.size() != data.x1.size()) {
    throw std::invalid_argument("permutation_pvalue: y and x1 lengths differ");
  }
  if (!original.ok()) {
    throw std::runtime_error("permutation_pvalue: original fit failed (" +
                             to_string(original.status) + ")");
  }
  if (original.coefficients.size() != 2) {
    throw std::invalid_argument(
        "permutation_pvalue: original fit has no slope coefficient");
  }

  PermutationResult result;
  result.beta1_orig = original.coefficients[1];
  result.n_perms = n_perms;
  const double threshold = std::abs(result.beta1_orig);

  // One slot per permutation; slots make the aggregation independent of
  // scheduling order.
  std::vector<std::optional<double>> slots(static_cast<std::size_t>(n_perms));
  parallel_for(slots.size(), options.threads, [&](std::size_t j) {
    const SeedPath perm_seed =
        seed.with_permutation(static_cast<std::int32_t>(j) + 1);
    const std::vector<double> x_perm = shuffle(data.x1, perm_seed);
    const FitResult fit = fit_poisson(DesignMatrix::with_predictor(x_perm),
                                      data.y, options.fit);
    if (fit.ok()) slots[j] = fit.coefficients[1];
  });

  result.beta1_perm.reserve(slots.size());
  for (const auto& slot : slots) {
    if (!slot) {
      ++result.n_failed_fits;
      continue;
    }
    result.beta1_perm.push_back(*slot);
    if (std::abs(*slot) >= threshold) ++result.count;
  }

  const long long effective = n_perms - result.n_failed_fits;
  if (effective < 1) {
    throw std::runtime_error("permutation_pvalue: every permuted fit failed");
  }
  result.p_value = options.add_one_correction
                       ? static_cast<double>(result.count + 1) /
                             static_cast<double>(effective + 1)
                       : static_cast<double>(result.count) /
                             static_cast<double>(effective);
  result.unreliable =
      result.n_failed_fits > options.max_failed_fraction * n_perms;
  return result;
}

}  // namespace poisperm
