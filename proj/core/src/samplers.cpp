// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace poisperm {

std::vector<double> sample_normal(const SeedPath& seed, std::size_t n) {
  if (n < 1) throw std::invalid_argument("sample_normal: n must be >= 1");
  StreamRng rng(seed);
  std::vector<double> out(n);
  for (double& v : out) v = rng.normal();
  return out;
}

std::vector<double> sample_poisson(const SeedPath& seed,
                                   const std::vector<double>& rates) {
  for (double r : rates) {
    if (!std::isfinite(r) || r <= 0.0) {
      throw std::invalid_argument("sample_poisson: rates must be finite and > 0");
    }
  }
  StreamRng rng(seed);
  std::vector<double> out(rates.size());
  for (std::size_t i = 0; i < rates.size(); ++i) {
    out[i] = static_cast<double>(rng.poisson(rates[i]));
  }
  return out;
}

std::vector<double> sample_f(const SeedPath& seed, const FParams& params,
                             std::size_t n) {
  if (n < 1) throw std::invalid_argument("sample_f: n must be >= 1");
  if (params.d1 < 1 || params.d2 < 1) {
    throw std::invalid_argument("sample_f: degrees of freedom must be >= 1");
  }
  StreamRng rng(seed);
  const double d1 = params.d1;
  const double d2 = params.d2;
  std::vector<double> out(n);
  for (double& v : out) {
    const double u = rng.chi_square(d1);
    const double w = rng.chi_square(d2);
    v = (u / d1) / (w / d2);
  }
  return out;
}

std::vector<double> discretize(const std::vector<double>& z) {
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!std::isfinite(z[i]) || z[i] < 0.0) {
      throw std::invalid_argument("discretize: values must be finite and >= 0");
    }
    out[i] = std::round(z[i]);
  }
  return out;
}

}  // namespace poisperm
