// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "poisperm/rng.hpp"
#include "poisperm/seed_path.hpp"

namespace poisperm {

/// F-distribution degrees of freedom. Both must be >= 1.
struct FParams {
  int d1 = 8;
  int d2 = 8;
};

/// n i.i.d. standard normal variates. n must be >= 1.
std::vector<double> sample_normal(const SeedPath& seed, std::size_t n);

/// Elementwise Poisson draws; every rate must be finite and > 0.
/// Counts are returned as integral-valued doubles.
std::vector<double> sample_poisson(const SeedPath& seed,
                                   const std::vector<double>& rates);

/// n i.i.d. F(d1, d2) variates, built as (U/d1)/(V/d2) from independent
/// chi-square draws. Strictly positive.
std::vector<double> sample_f(const SeedPath& seed, const FParams& params,
                             std::size_t n);

/// Round to the nearest integer, halves away from zero. Input must be
/// finite and nonnegative.
std::vector<double> discretize(const std::vector<double>& z);

}  // namespace poisperm
