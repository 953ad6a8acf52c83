// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace poisperm {

SizeGrid make_grid(const std::vector<GridSegment>& segments) {
  if (segments.empty()) {
    throw std::invalid_argument("make_grid: need at least one segment");
  }
  SizeGrid grid;
  grid.segments = segments;
  for (const GridSegment& seg : segments) {
    if (!(seg.log10_lo < seg.log10_hi) || !std::isfinite(seg.log10_lo) ||
        !std::isfinite(seg.log10_hi)) {
      throw std::invalid_argument("make_grid: segment needs lo < hi");
    }
    if (seg.points < 1) {
      throw std::invalid_argument("make_grid: segment needs points >= 1");
    }
    for (int i = 0; i < seg.points; ++i) {
      const double t = seg.points == 1
                           ? 0.0
                           : static_cast<double>(i) / (seg.points - 1);
      const double l = seg.log10_lo + t * (seg.log10_hi - seg.log10_lo);
      const long long n = std::llround(std::pow(10.0, l));
      grid.sizes.push_back(std::max(1LL, n));
    }
  }
  std::sort(grid.sizes.begin(), grid.sizes.end());
  grid.sizes.erase(std::unique(grid.sizes.begin(), grid.sizes.end()),
                   grid.sizes.end());
  return grid;
}

std::vector<GridSegment> parse_grid_spec(const std::string& text) {
  std::vector<GridSegment> segments;
  std::size_t pos = 0;
  auto parse_double = [&](char terminator) {
    const std::size_t end = text.find(terminator, pos);
    const char* first = text.data() + pos;
    const char* last = text.data() + (end == std::string::npos ? text.size() : end);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw std::invalid_argument("grid spec: expected lo:hi:points, got '" +
                                  text + "'");
    }
    pos = (end == std::string::npos ? text.size() : end + 1);
    return value;
  };
  while (pos < text.size()) {
    GridSegment seg;
    seg.log10_lo = parse_double(':');
    seg.log10_hi = parse_double(':');
    const double points = parse_double(',');
    if (points != std::floor(points) || points < 1) {
      throw std::invalid_argument("grid spec: points must be a positive integer");
    }
    seg.points = static_cast<int>(points);
    segments.push_back(seg);
  }
  if (segments.empty()) {
    throw std::invalid_argument("grid spec: empty");
  }
  return segments;
}

}  // namespace poisperm
