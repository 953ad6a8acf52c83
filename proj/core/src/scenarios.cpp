// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace poisperm {

namespace {

// Substream tags: each generated variable reads its own stream so the
// draws for one variable do not depend on how many others were generated.
constexpr std::uint64_t kStreamX1 = 1;
constexpr std::uint64_t kStreamX2 = 2;
constexpr std::uint64_t kStreamOutcome = 3;

std::vector<double> normals(const SeedPath& seed, std::uint64_t tag,
                            std::size_t n) {
  StreamRng rng(seed, tag);
  std::vector<double> out(n);
  for (double& v : out) v = rng.normal();
  return out;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void require_kind(const ScenarioSpec& spec, ScenarioKind expected,
                  const char* where) {
  if (spec.kind != expected) {
    throw std::invalid_argument(std::string(where) + ": wrong scenario kind " +
                                to_string(spec.kind));
  }
}

}  // namespace

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::null_poisson: return "null_poisson";
    case ScenarioKind::misspecified_f: return "misspecified_f";
    case ScenarioKind::omitted_predictor: return "omitted_predictor";
    case ScenarioKind::censored_poisson: return "censored_poisson";
  }
  return "unknown";
}

ScenarioSpec ScenarioSpec::null_poisson(double beta0) {
  ScenarioSpec s;
  s.kind = ScenarioKind::null_poisson;
  s.beta0 = beta0;
  return s;
}

ScenarioSpec ScenarioSpec::misspecified_f(FParams params) {
  if (params.d1 < 1 || params.d2 < 1) {
    throw std::invalid_argument("misspecified_f: degrees of freedom must be >= 1");
  }
  ScenarioSpec s;
  s.kind = ScenarioKind::misspecified_f;
  s.f_params = params;
  return s;
}

ScenarioSpec ScenarioSpec::omitted_predictor(double beta0, double beta2) {
  ScenarioSpec s;
  s.kind = ScenarioKind::omitted_predictor;
  s.beta0 = beta0;
  s.beta2 = beta2;
  return s;
}

ScenarioSpec ScenarioSpec::censored_poisson(double lambda, long long threshold) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("censored_poisson: lambda must be positive");
  }
  if (threshold < 0) {
    throw std::invalid_argument("censored_poisson: threshold must be >= 0");
  }
  ScenarioSpec s;
  s.kind = ScenarioKind::censored_poisson;
  s.lambda = lambda;
  s.censor_threshold = threshold;
  return s;
}

std::string ScenarioSpec::params_string() const {
  switch (kind) {
    case ScenarioKind::null_poisson:
      return "beta0=" + format_value(beta0);
    case ScenarioKind::misspecified_f:
      return "d1=" + std::to_string(f_params.d1) +
             ";d2=" + std::to_string(f_params.d2);
    case ScenarioKind::omitted_predictor:
      return "beta0=" + format_value(beta0) + ";beta2=" + format_value(beta2);
    case ScenarioKind::censored_poisson:
      return "lambda=" + format_value(lambda) +
             ";threshold=" + std::to_string(censor_threshold);
  }
  return "";
}

Dataset gen_null(const ScenarioSpec& spec, std::size_t n, const SeedPath& seed) {
  require_kind(spec, ScenarioKind::null_poisson, "gen_null");
  if (n < 2) throw std::invalid_argument("gen_null: n must be >= 2");
  Dataset data;
  data.x1 = normals(seed, kStreamX1, n);
  const double rate = std::exp(spec.beta0);
  StreamRng rng(seed, kStreamOutcome);
  data.y.resize(n);
  for (double& v : data.y) v = static_cast<double>(rng.poisson(rate));
  return data;
}

Dataset gen_scenario1(const FParams& params, std::size_t n, const SeedPath& seed) {
  if (n < 2) throw std::invalid_argument("gen_scenario1: n must be >= 2");
  if (params.d1 < 1 || params.d2 < 1) {
    throw std::invalid_argument("gen_scenario1: degrees of freedom must be >= 1");
  }
  Dataset data;
  data.x1 = normals(seed, kStreamX1, n);
  StreamRng rng(seed, kStreamOutcome);
  const double d1 = params.d1;
  const double d2 = params.d2;
  data.y.resize(n);
  for (double& v : data.y) {
    const double z = (rng.chi_square(d1) / d1) / (rng.chi_square(d2) / d2);
    v = std::round(z);
  }
  return data;
}

Dataset gen_scenario1(std::size_t n, const SeedPath& seed) {
  return gen_scenario1(FParams{8, 8}, n, seed);
}

Dataset gen_scenario2(const ScenarioSpec& spec, std::size_t n, const SeedPath& seed) {
  require_kind(spec, ScenarioKind::omitted_predictor, "gen_scenario2");
  if (n < 2) throw std::invalid_argument("gen_scenario2: n must be >= 2");
  Dataset data;
  data.x1 = normals(seed, kStreamX1, n);
  data.x2_hidden = normals(seed, kStreamX2, n);
  StreamRng rng(seed, kStreamOutcome);
  data.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double rate = std::exp(spec.beta0 + spec.beta2 * (*data.x2_hidden)[i]);
    data.y[i] = static_cast<double>(rng.poisson(rate));
  }
  return data;
}

std::vector<double> gen_censored_poisson(double lambda, long long threshold,
                                         std::size_t n, const SeedPath& seed) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("gen_censored_poisson: lambda must be positive");
  }
  if (threshold < 0) {
    throw std::invalid_argument("gen_censored_poisson: threshold must be >= 0");
  }
  if (n < 1) throw std::invalid_argument("gen_censored_poisson: n must be >= 1");
  StreamRng rng(seed, kStreamOutcome);
  std::vector<double> y(n);
  for (double& v : y) {
    const long long draw = rng.poisson(lambda);
    v = draw < threshold ? 0.0 : static_cast<double>(draw);
  }
  return y;
}

double estimate_lambda(const std::vector<double>& y) {
  if (y.empty()) throw std::invalid_argument("estimate_lambda: empty vector");
  double sum = 0.0;
  for (double v : y) sum += v;
  return sum / static_cast<double>(y.size());
}

Dataset generate(const ScenarioSpec& spec, std::size_t n, const SeedPath& seed) {
  switch (spec.kind) {
    case ScenarioKind::null_poisson: return gen_null(spec, n, seed);
    case ScenarioKind::misspecified_f: return gen_scenario1(spec.f_params, n, seed);
    case ScenarioKind::omitted_predictor: return gen_scenario2(spec, n, seed);
    case ScenarioKind::censored_poisson:
      throw std::invalid_argument(
          "generate: censored_poisson has no regression dataset");
  }
  throw std::invalid_argument("generate: unknown scenario kind");
}

}  // namespace poisperm
