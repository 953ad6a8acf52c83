// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace poisperm {

/// One log10-spaced run of sample sizes.
struct GridSegment {
  double log10_lo = 0.0;
  double log10_hi = 0.0;
  int points = 0;
};

struct SizeGrid {
  std::vector<GridSegment> segments;
  /// Realized sizes: 10^l rounded to the nearest integer, deduplicated
  /// across segment boundaries, ascending.
  std::vector<long long> sizes;
};

/// Builds the realized grid. Throws on empty segments, lo >= hi, or
/// points < 1.
SizeGrid make_grid(const std::vector<GridSegment>& segments);

/// Parses "lo:hi:points[,lo:hi:points...]".
std::vector<GridSegment> parse_grid_spec(const std::string& text);

}  // namespace poisperm
