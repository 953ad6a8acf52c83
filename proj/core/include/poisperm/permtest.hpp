// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "poisperm/dataset.hpp"
#include "poisperm/glm.hpp"
#include "poisperm/seed_path.hpp"

namespace poisperm {

struct PermutationOptions {
  /// Use (count + 1) / (N + 1) instead of count / N. Off by default: the
  /// plain ratio is the contract, and it can legitimately return 0.
  bool add_one_correction = false;
  /// Flag the result unreliable when more than this fraction of the
  /// permuted fits fail.
  double max_failed_fraction = 0.05;
  FitOptions fit{};
  /// Worker cap for the permutation fits; the result is identical to a
  /// sequential run for any value. 1 = sequential.
  int threads = 1;
};

struct PermutationResult {
  double beta1_orig = 0.0;
  long long count = 0;     // permutations with |beta1_perm| >= |beta1_orig|
  int n_perms = 0;         // requested N
  double p_value = 1.0;
  int n_failed_fits = 0;   // permuted fits excluded from both sides of the ratio
  bool unreliable = false;
  /// Empirical null: slope estimates of the successful permuted fits, in
  /// permutation order.
  std::vector<double> beta1_perm;
};

/// Permutation p-value for the regression slope. Fits the original data,
/// then refits N datasets whose predictor was shuffled uniformly at
/// random (Fisher-Yates keyed by seed.with_permutation(j), j = 1..N); the
/// outcome vector is never touched. p = count / N, counting permutations
/// whose |slope| reaches |beta1_orig|; failed permuted fits leave both the
/// numerator and the denominator.
///
/// Throws std::runtime_error when the original fit fails, and
/// std::invalid_argument on malformed input.
PermutationResult permutation_pvalue(const Dataset& data, int n_perms,
                                     const SeedPath& seed,
                                     const PermutationOptions& options = {});

/// Same, but reuses an already-computed fit of the original arrangement
/// instead of refitting it.
PermutationResult permutation_pvalue(const Dataset& data,
                                     const FitResult& original, int n_perms,
                                     const SeedPath& seed,
                                     const PermutationOptions& options = {});

/// Uniformly random permutation of x (Fisher-Yates), preserving the
/// multiset of values.
std::vector<double> shuffle(const std::vector<double>& x, const SeedPath& seed);

}  // namespace poisperm
