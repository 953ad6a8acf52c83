// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

namespace poisperm {

/// One simulated (or user-supplied) dataset. The analysis model only ever
/// sees (y, x1); x2_hidden carries the unobserved predictor for
/// provenance when the generating process had one.
struct Dataset {
  std::vector<double> y;   // nonnegative integral counts
  std::vector<double> x1;  // observed predictor
  std::optional<std::vector<double>> x2_hidden;

  [[nodiscard]] std::size_t size() const { return y.size(); }
};

/// CSV with header `y,x1` or `y,x1,x2_hidden`.
void write_csv(const Dataset& data, std::ostream& out);

/// Parses the same format; x2_hidden is optional. Throws
/// std::invalid_argument on malformed input or non-count outcomes.
Dataset read_dataset_csv(std::istream& in);

}  // namespace poisperm
