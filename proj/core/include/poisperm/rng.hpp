// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

#include "poisperm/seed_path.hpp"

namespace poisperm {

namespace detail {

/// SplitMix64 finalizer (Steele, Lea & Flood). Bijective on uint64.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based random stream keyed by a SeedPath.
///
/// The engine is SplitMix64: a Weyl counter whose output is the mixed
/// counter value, so a stream is fully determined by its starting key.
/// Distinct (path, stream_tag) pairs give statistically independent
/// streams; the tag separates the per-variable substreams a generator
/// needs (predictor vs outcome draws).
///
/// All distribution methods are exact-rejection samplers driven only by
/// this stream, so the sequence of variates is reproducible bit for bit.
class StreamRng {
 public:
  explicit StreamRng(const SeedPath& path, std::uint64_t stream_tag = 0);
  explicit StreamRng(std::uint64_t raw_key) : state_(raw_key) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    return detail::mix64(z);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via the Marsaglia polar method (caches the spare).
  double normal();

  /// Gamma(shape, 1) via Marsaglia-Tsang, with the alpha<1 boost.
  double gamma(double shape);

  double chi_square(double dof) { return 2.0 * gamma(0.5 * dof); }

  /// Poisson count; inversion-by-products for small rates, Hormann's
  /// PTRS transformed rejection for rate >= 10.
  long long poisson(double rate);

  /// Uniform integer in [0, bound), bias-free. bound must be >= 1.
  std::size_t uniform_below(std::size_t bound);

 private:
  long long poisson_ptrs(double rate);

  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace poisperm
