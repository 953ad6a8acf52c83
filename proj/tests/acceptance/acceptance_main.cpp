// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
//
// Full-pipeline acceptance runs. Each check prints one PASS/FAIL line;
// the exit code is the number of failures. Everything runs from fixed
// seeds, so a green suite stays green.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "poisperm/glm.hpp"
#include "poisperm/harness.hpp"
#include "poisperm/io.hpp"
#include "poisperm/parallel.hpp"
#include "poisperm/permtest.hpp"
#include "poisperm/scenarios.hpp"
#include "support/oracles.hpp"

using namespace poisperm;
namespace ts = testsupport;

namespace {

int g_threads = 0;  // 0 = hardware concurrency

struct CheckResult {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

bool inside(double rate, const std::pair<double, double>& band) {
  return rate > band.first && rate < band.second;
}

std::vector<double> method_rates(const TypeIExperimentResult& run, Method m) {
  std::vector<double> rates;
  for (const auto& e : run.estimates) {
    if (e.method == m) rates.push_back(e.rate);
  }
  return rates;
}

// --- criterion 1 -----------------------------------------------------------

CheckResult band_reproduction() {
  const auto [lo, hi] = binomial_band(1000, 0.05);
  const bool pass =
      std::llround(lo * 1e4) == 362 && std::llround(hi * 1e4) == 638;
  return {pass, "binomial_band(1000, 0.05) = (" + fmt("%.6f", lo) + ", " +
                    fmt("%.6f", hi) + "), expected (0.0362, 0.0638) at 4dp"};
}

// --- criterion 2 -----------------------------------------------------------

CheckResult calibration_baseline() {
  const auto grid = make_grid({{1, 4, 10}});
  ExperimentConfig config;
  config.replicates = 1000;
  config.methods = {true, false};
  config.master_seed = 1002;
  config.threads = g_threads;
  const auto run =
      run_type1_experiment(ScenarioSpec::null_poisson(0.3), grid, config);
  const auto band = binomial_band(config.replicates, config.alpha);
  int in_band = 0;
  for (double rate : method_rates(run, Method::wald)) {
    in_band += inside(rate, band);
  }
  return {in_band >= 8, std::to_string(in_band) +
                            "/10 null-model Wald rates inside "
                            "(0.0362, 0.0638), need >= 8"};
}

// harness invariant: the full published grid stays calibrated
CheckResult calibration_full_grid() {
  const auto grid = make_grid({{1, 2, 30}, {2, 5, 30}});
  ExperimentConfig config;
  config.replicates = 1000;
  config.methods = {true, false};
  config.master_seed = 1010;
  config.threads = g_threads;
  const auto run =
      run_type1_experiment(ScenarioSpec::null_poisson(0.3), grid, config);
  const auto band = binomial_band(config.replicates, config.alpha);
  int in_band = 0;
  for (double rate : method_rates(run, Method::wald)) {
    in_band += inside(rate, band);
  }
  return {in_band >= 55, std::to_string(in_band) + "/" +
                             std::to_string(grid.sizes.size()) +
                             " rates inside the band across the full grid, "
                             "need >= 55"};
}

// --- criterion 3 -----------------------------------------------------------

CheckResult scenario1_inflation() {
  const auto grid = make_grid({{1, 4, 10}});
  ExperimentConfig config;
  config.replicates = 1000;
  config.methods = {true, false};
  config.master_seed = 1003;
  config.threads = g_threads;
  const auto run =
      run_type1_experiment(ScenarioSpec::misspecified_f(), grid, config);
  const auto band = binomial_band(config.replicates, config.alpha);

  bool small_ok = true;
  bool large_ok = false;
  std::string detail;
  for (const auto& e : run.estimates) {
    if (e.n <= 30) {
      small_ok = small_ok && inside(e.rate, band);
      detail += "n=" + std::to_string(e.n) + ":" + fmt("%.3f", e.rate) + " ";
    }
    if (e.n == 10000) {
      large_ok = !inside(e.rate, band);
      detail += "n=10000:" + fmt("%.3f", e.rate);
    }
  }
  return {small_ok && large_ok,
          detail + " (inside band at n<=30, outside at n=1e4)"};
}

// --- criterion 4 -----------------------------------------------------------

CheckResult scenario2_inflation() {
  const auto grid = make_grid({{1, 4, 10}});
  ExperimentConfig config;
  config.replicates = 1000;
  config.methods = {true, false};
  config.master_seed = 1004;
  config.threads = g_threads;

  const std::vector<std::pair<double, double>> settings = {
      {0.3, 0.7}, {0.3, 0.8}, {0.5, 0.7}, {0.5, 0.8}};
  std::map<std::pair<double, double>, std::vector<double>> rates;
  bool all_above = true;
  double min_rate = 1.0;
  for (const auto& [beta0, beta2] : settings) {
    const auto run = run_type1_experiment(
        ScenarioSpec::omitted_predictor(beta0, beta2), grid, config);
    rates[{beta0, beta2}] = method_rates(run, Method::wald);
    for (double rate : rates[{beta0, beta2}]) {
      all_above = all_above && rate > 0.0638;
      min_rate = std::min(min_rate, rate);
    }
  }

  int ordered = 0;
  for (std::size_t i = 0; i < grid.sizes.size(); ++i) {
    ordered += rates[{0.5, 0.8}][i] >= rates[{0.3, 0.7}][i];
  }
  const bool pass = all_above && ordered >= 8;
  return {pass, "min rate " + fmt("%.4f", min_rate) +
                    " (all 40 must exceed 0.0638); (0.5,0.8) >= (0.3,0.7) at " +
                    std::to_string(ordered) + "/10 sizes (need >= 8)"};
}

// --- criterion 5 -----------------------------------------------------------

CheckResult permutation_correction() {
  const auto grid = make_grid({{1, 4, 8}});
  ExperimentConfig config;
  config.replicates = 200;
  config.n_perm = 200;
  config.master_seed = 1005;
  config.threads = g_threads;

  std::vector<ScenarioSpec> scenarios = {
      ScenarioSpec::misspecified_f(), ScenarioSpec::omitted_predictor(0.3, 0.7),
      ScenarioSpec::omitted_predictor(0.3, 0.8),
      ScenarioSpec::omitted_predictor(0.5, 0.7),
      ScenarioSpec::omitted_predictor(0.5, 0.8)};

  const auto band = binomial_band(config.replicates, config.alpha);
  int cells = 0;
  int cells_inside = 0;
  double max_rho = 0.0;
  for (const auto& spec : scenarios) {
    const auto run = run_type1_experiment(spec, grid, config);
    std::vector<double> log_n, rates;
    for (const auto& e : run.estimates) {
      if (e.method != Method::permutation) continue;
      ++cells;
      cells_inside += inside(e.rate, band);
      log_n.push_back(std::log10(static_cast<double>(e.n)));
      rates.push_back(e.rate);
    }
    max_rho = std::max(max_rho, std::abs(ts::spearman_rho(log_n, rates)));
  }
  const int needed = (cells * 9 + 9) / 10;  // ceil(0.9 * cells)
  const bool pass = cells_inside >= needed && max_rho < 0.5;
  return {pass, std::to_string(cells_inside) + "/" + std::to_string(cells) +
                    " permutation rates inside (" + fmt("%.4f", band.first) +
                    ", " + fmt("%.4f", band.second) + ") (need >= " +
                    std::to_string(needed) + "); max Spearman |rho| = " +
                    fmt("%.3f", max_rho) + " (< 0.5)"};
}

// --- criterion 6 -----------------------------------------------------------

CheckResult bias_study() {
  const auto grid = make_grid({{1, 6, 10}});
  const auto records = run_bias_experiment(5.0, 2, grid, 1000, 1006, g_threads);

  std::map<long long, std::vector<double>> by_size;
  for (const auto& r : records) by_size[r.n].push_back(r.bias);

  std::vector<double> iqrs;
  for (long long n : grid.sizes) {
    auto& biases = by_size[n];
    iqrs.push_back(ts::quantile(biases, 0.75) - ts::quantile(biases, 0.25));
  }
  int inversions = 0;
  for (std::size_t i = 1; i < iqrs.size(); ++i) {
    inversions += iqrs[i] > iqrs[i - 1];
  }

  const double median_big = ts::quantile(by_size[1'000'000], 0.5);
  const double expected = -5.0 * std::exp(-5.0);  // -0.0337
  const bool pass =
      inversions <= 1 && std::abs(median_big - expected) < 0.001;
  return {pass, "IQR inversions: " + std::to_string(inversions) +
                    " (<= 1); median bias at n=1e6: " +
                    fmt("%.5f", median_big) + " vs analytic " +
                    fmt("%.5f", expected) + " (+/- 0.001)"};
}

// --- criterion 7 -----------------------------------------------------------

CheckResult oracle_equivalence() {
  int checked = 0;
  double worst = 0.0;
  std::uint64_t stream = 1007;
  while (checked < 50) {
    StreamRng rng(SeedPath{stream++, -1, -1, -1, -1});
    const std::size_t n = 5 + rng.uniform_below(46);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.normal();
      y[i] = static_cast<double>(rng.poisson(std::exp(0.2 + 0.3 * x[i])));
    }
    const auto oracle = ts::newton_poisson_fit(y, &x);
    if (!oracle.ok) continue;  // degenerate draw; take the next dataset
    const auto fit = fit_poisson(DesignMatrix::with_predictor(x), y);
    if (!fit.ok()) return {false, "fit failed where the oracle succeeded"};
    ++checked;
    for (int c = 0; c < 2; ++c) {
      worst = std::max(worst, std::abs(fit.coefficients[c] - oracle.beta[c]));
      worst = std::max(worst, std::abs(fit.standard_errors[c] - oracle.se[c]));
    }
  }
  return {worst < 1e-6, "max |fit - oracle| over 50 datasets = " +
                            fmt("%.2e", worst) + " (< 1e-6)"};
}

// --- criterion 8 -----------------------------------------------------------

CheckResult permutation_uniformity() {
  const int replicates = 1000;
  const int n_perm = 500;
  const std::size_t n = 500;
  const auto spec = ScenarioSpec::null_poisson(0.3);

  std::vector<double> p_values(replicates, -1.0);
  parallel_for(replicates, g_threads, [&](std::size_t k) {
    const SeedPath path{1008, spec.scenario_id(), 0,
                        static_cast<std::int32_t>(k), -1};
    const Dataset data = gen_null(spec, n, path);
    p_values[k] = permutation_pvalue(data, n_perm, path).p_value;
  });

  const auto deciles = ts::decile_counts(p_values);
  long long lo = replicates, hi = 0;
  for (long long c : deciles) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  const bool pass = lo >= 60 && hi <= 140;
  std::string detail = "decile counts:";
  for (long long c : deciles) detail += " " + std::to_string(c);
  return {pass, detail + " (each within 100 +/- 40)"};
}

// --- criterion 9 -----------------------------------------------------------

CheckResult determinism() {
  const auto grid = make_grid({{1, 3, 4}});
  ExperimentConfig config;
  config.replicates = 50;
  config.n_perm = 50;
  config.master_seed = 1009;

  auto run_at = [&](int threads) {
    ExperimentConfig c = config;
    c.threads = threads;
    const auto run =
        run_type1_experiment(ScenarioSpec::misspecified_f(), grid, c);
    std::ostringstream csv;
    write_results_csv(csv, run.estimates, c.master_seed);
    return csv.str();
  };
  const std::string serial = run_at(1);
  const std::string wide = run_at(8);

  auto bias_at = [&](int threads) {
    const auto records =
        run_bias_experiment(5.0, 2, grid, 200, config.master_seed, threads);
    std::ostringstream csv;
    write_bias_csv(csv, records);
    return csv.str();
  };
  const std::string bias_serial = bias_at(1);
  const std::string bias_wide = bias_at(8);

  const bool pass = serial == wide && bias_serial == bias_wide;
  return {pass, pass ? "results and bias CSVs byte-identical at 1 and 8 threads"
                     : "thread count changed the output bytes"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      g_threads = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::printf("usage: acceptance [--threads N] [--only <substring>]\n");
      return 2;
    }
  }

  using Check = std::pair<std::string, std::function<CheckResult()>>;
  const std::vector<Check> checks = {
      {"criterion 1: confidence band reproduction", band_reproduction},
      {"criterion 2: calibration baseline (10 sizes)", calibration_baseline},
      {"criterion 3: scenario 1 inflation shape", scenario1_inflation},
      {"criterion 4: scenario 2 inflation and ordering", scenario2_inflation},
      {"criterion 5: permutation correction (desk preset)",
       permutation_correction},
      {"criterion 6: censored-measurement bias study", bias_study},
      {"criterion 7: oracle equivalence of the fitter", oracle_equivalence},
      {"criterion 8: permutation p-value uniformity", permutation_uniformity},
      {"criterion 9: thread-count determinism", determinism},
      {"harness invariant: full-grid calibration baseline",
       calibration_full_grid},
  };

  int failures = 0;
  for (const auto& [label, fn] : checks) {
    if (!only.empty() && label.find(only) == std::string::npos) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = fn();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] %s: %s (%.1fs)\n", result.pass ? "PASS" : "FAIL",
                label.c_str(), result.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += !result.pass;
  }
  if (failures > 0) {
    std::printf("%d check(s) failed\n", failures);
  } else {
    std::printf("all checks passed\n");
  }
  return failures;
}
