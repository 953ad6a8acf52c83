// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/rng.hpp"

#include <cmath>

namespace poisperm {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t absorb(std::uint64_t h, std::uint64_t value) {
  return detail::mix64(h ^ (value + kGolden + (h << 6) + (h >> 2)));
}

}  // namespace

std::uint64_t SeedPath::key() const {
  std::uint64_t h = detail::mix64(master_seed + kGolden);
  h = absorb(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(scenario_id)));
  h = absorb(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(size_index)));
  h = absorb(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(replicate_index)));
  h = absorb(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(permutation_index)));
  return h;
}

StreamRng::StreamRng(const SeedPath& path, std::uint64_t stream_tag)
    : state_(absorb(path.key(), stream_tag)) {}

double StreamRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  has_spare_ = true;
  return u * m;
}

double StreamRng::gamma(double shape) {
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a+1) * U^(1/a). U is kept positive so that
    // chi-square (and hence F) variates stay strictly positive.
    const double g = gamma(shape + 1.0);
    double u = next_double();
    while (u == 0.0) u = next_double();
    return g * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_double();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

long long StreamRng::poisson(double rate) {
  if (rate < 10.0) {
    // Product-of-uniforms inversion; expected rate+1 uniforms per draw.
    const double limit = std::exp(-rate);
    long long k = -1;
    double prod = 1.0;
    do {
      ++k;
      prod *= next_double();
    } while (prod > limit);
    return k;
  }
  return poisson_ptrs(rate);
}

// Transformed rejection with squeeze (Hormann's PTRS). Valid for rate >= 10.
long long StreamRng::poisson_ptrs(double rate) {
  const double slam = std::sqrt(rate);
  const double loglam = std::log(rate);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = next_double() - 0.5;
    const double v = next_double();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + rate + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<long long>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * loglam - rate - std::lgamma(k + 1.0)) {
      return static_cast<long long>(k);
    }
  }
}

std::size_t StreamRng::uniform_below(std::size_t bound) {
  // Reject values below 2^64 mod bound so every residue is equally likely.
  const std::uint64_t b = static_cast<std::uint64_t>(bound);
  const std::uint64_t threshold = (0 - b) % b;
  std::uint64_t r = next_u64();
  while (r < threshold) r = next_u64();
  return static_cast<std::size_t>(r % b);
}

}  // namespace poisperm
