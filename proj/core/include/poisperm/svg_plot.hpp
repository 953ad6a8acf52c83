// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "poisperm/harness.hpp"
#include "poisperm/io.hpp"

namespace poisperm {

/// Rate-vs-size chart: one marker per estimate (circles for Wald, crosses
/// for permutation), a smoothed curve per series, and the shaded
/// confidence band with its edges labeled. Throws std::invalid_argument
/// when rows is empty.
std::string render_rates_svg(const std::vector<ResultRow>& rows,
                             int smooth_window = 5);

/// Horizontal box-and-whisker of the bias per sample size with a dashed
/// reference line at zero bias.
std::string render_bias_svg(const std::vector<BiasRecord>& records);

}  // namespace poisperm
