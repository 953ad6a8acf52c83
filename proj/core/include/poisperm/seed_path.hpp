// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace poisperm {

/// Hierarchical RNG coordinates.
///
/// Every random draw in the library is keyed by a SeedPath: a master seed
/// plus the coordinates of the work unit that consumes the stream
/// (scenario, size index within the grid, replicate, permutation). Equal
/// paths yield bitwise-equal variate streams no matter how work is
/// scheduled across threads. A level set to -1 is unused.
struct SeedPath {
  std::uint64_t master_seed = 0;
  std::int32_t scenario_id = -1;
  std::int32_t size_index = -1;
  std::int32_t replicate_index = -1;
  std::int32_t permutation_index = -1;

  [[nodiscard]] SeedPath with_scenario(std::int32_t id) const {
    SeedPath p = *this;
    p.scenario_id = id;
    return p;
  }
  [[nodiscard]] SeedPath with_size(std::int32_t index) const {
    SeedPath p = *this;
    p.size_index = index;
    return p;
  }
  [[nodiscard]] SeedPath with_replicate(std::int32_t index) const {
    SeedPath p = *this;
    p.replicate_index = index;
    return p;
  }
  [[nodiscard]] SeedPath with_permutation(std::int32_t index) const {
    SeedPath p = *this;
    p.permutation_index = index;
    return p;
  }

  /// 64-bit stream key derived from all five coordinates.
  [[nodiscard]] std::uint64_t key() const;

  friend bool operator==(const SeedPath&, const SeedPath&) = default;
};

}  // namespace poisperm
