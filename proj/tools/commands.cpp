// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "poisperm/dataset.hpp"
#include "poisperm/glm.hpp"
#include "poisperm/harness.hpp"
#include "poisperm/io.hpp"
#include "poisperm/manifest.hpp"
#include "poisperm/permtest.hpp"
#include "poisperm/svg_plot.hpp"

namespace poisperm::cli {

namespace {

namespace fs = std::filesystem;

struct Preset {
  long long k;
  int n_perm;
  const char* scenario_grid;
  const char* bias_grid;
};

Preset preset_values(const std::string& name) {
  if (name == "paper") return {1000, 1000, "1:2:30,2:5:30", "1:6:10"};
  if (name == "desk") return {200, 200, "1:4:8", "1:4:8"};
  throw std::invalid_argument("unknown preset '" + name + "' (paper|desk)");
}

MethodSet parse_methods(const std::string& text) {
  MethodSet methods{false, false};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "wald") {
      methods.wald = true;
    } else if (item == "permutation") {
      methods.permutation = true;
    } else {
      throw std::invalid_argument("unknown method '" + item +
                                  "' (wald|permutation)");
    }
  }
  if (!methods.wald && !methods.permutation) {
    throw std::invalid_argument("no analysis method selected");
  }
  return methods;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << contents;
  out.flush();
  if (!out.good()) {
    throw std::runtime_error("write failed for '" + path.string() + "'");
  }
}

ScenarioSpec scenario_for(const RunConfig& config) {
  if (config.command == "scenario1") return ScenarioSpec::misspecified_f();
  if (config.command == "scenario2") {
    return ScenarioSpec::omitted_predictor(config.beta0, config.beta2);
  }
  if (config.command == "null-check") {
    return ScenarioSpec::null_poisson(config.beta0);
  }
  throw std::invalid_argument("no scenario for command " + config.command);
}

std::map<std::string, std::string> config_echo(const RunConfig& config) {
  // Excludes --threads: outputs are identical for any worker count.
  std::map<std::string, std::string> echo;
  echo["command"] = config.command;
  echo["preset"] = config.preset;
  echo["seed"] = std::to_string(config.seed);
  echo["alpha"] = format_value(config.alpha);
  echo["grid"] = config.grid;
  if (config.command == "bias") {
    echo["replicates"] = std::to_string(config.k);
    echo["lambda"] = format_value(config.lambda);
    echo["threshold"] = std::to_string(config.threshold);
  } else {
    echo["k"] = std::to_string(config.k);
    echo["n_perm"] = std::to_string(config.n_perm);
    echo["methods"] = config.methods;
    if (config.command == "scenario2") {
      echo["beta0"] = format_value(config.beta0);
      echo["beta2"] = format_value(config.beta2);
    } else if (config.command == "null-check") {
      echo["beta0"] = format_value(config.beta0);
    }
  }
  return echo;
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file '" + path + "'");
  }
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    return begin == std::string::npos ? std::string{}
                                      : s.substr(begin, end - begin + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key");
    }
    entries[key] = value;
  }
  return entries;
}

void apply_preset(RunConfig& config) {
  const Preset preset = preset_values(config.preset);
  if (config.k < 0) config.k = preset.k;
  if (config.n_perm < 0) config.n_perm = preset.n_perm;
  if (config.grid.empty()) {
    config.grid =
        config.command == "bias" ? preset.bias_grid : preset.scenario_grid;
  }
  if (config.methods.empty()) {
    config.methods =
        config.command == "null-check" ? "wald" : "wald,permutation";
  }
}

int cmd_simulate(const RunConfig& config) {
  const SizeGrid grid = make_grid(parse_grid_spec(config.grid));
  if (config.k < 1) throw std::invalid_argument("k must be >= 1");

  const fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory '" +
                             dir.string() + "': " + ec.message());
  }

  RunManifest manifest;
  manifest.config = config_echo(config);
  manifest.realized_grid = grid.sizes;

  const auto start = std::chrono::steady_clock::now();
  std::ostringstream csv;
  if (config.command == "bias") {
    const auto records = run_bias_experiment(config.lambda, config.threshold,
                                             grid, config.k, config.seed,
                                             config.threads);
    write_bias_csv(csv, records);
    manifest.workload = {};  // the bias study fits no regressions
  } else {
    ExperimentConfig experiment;
    experiment.replicates = config.k;
    experiment.n_perm = config.n_perm;
    experiment.alpha = config.alpha;
    experiment.methods = parse_methods(config.methods);
    experiment.master_seed = config.seed;
    experiment.threads = config.threads;
    const auto run = run_type1_experiment(scenario_for(config), grid, experiment);
    write_results_csv(csv, run.estimates, config.seed);
    manifest.workload = run.workload;
  }
  manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  const fs::path csv_path = dir / (config.command + ".csv");
  write_file(csv_path, csv.str());

  std::ostringstream mjson;
  write_manifest(mjson, manifest);
  write_file(dir / (config.command + ".manifest.json"), mjson.str());

  std::cout << "wrote " << csv_path.string() << " (grid of " << grid.sizes.size()
            << " sizes, seed " << config.seed << ")\n";
  return 0;
}

int cmd_test(const RunConfig& config) {
  std::ifstream in(config.input_path);
  if (!in) {
    throw std::invalid_argument("cannot open input '" + config.input_path + "'");
  }
  const Dataset data = read_dataset_csv(in);
  if (data.size() < 3) {
    throw std::invalid_argument("need at least 3 observations");
  }
  bool all_zero = true;
  for (double v : data.y) all_zero = all_zero && v == 0.0;
  if (all_zero) {
    throw std::invalid_argument(
        "outcome column is all zeros; the Poisson MLE does not exist");
  }
  bool constant_x = true;
  for (double v : data.x1) constant_x = constant_x && v == data.x1.front();
  if (constant_x) {
    throw std::invalid_argument(
        "predictor column is constant; the slope is not identifiable");
  }
  if (config.n_perm < 1) throw std::invalid_argument("n-perm must be >= 1");

  const FitResult fit =
      fit_poisson(DesignMatrix::with_predictor(data.x1), data.y);
  if (!fit.ok()) {
    throw std::runtime_error("fit failed: " + to_string(fit.status));
  }
  const WaldTest wald = wald_pvalue(fit, 1);

  PermutationOptions options;
  options.threads = config.threads;
  const SeedPath seed{config.seed, -1, -1, -1, -1};
  const PermutationResult perm =
      permutation_pvalue(data, fit, config.n_perm, seed, options);

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "n: %zu\nbeta1_hat: %.6g\nse_beta1: %.6g\nwald_z: %.6g\n"
                "wald_p: %.6g\npermutation_p: %.6g\nn_perm: %d\n"
                "n_failed_fits: %d\nunreliable: %s\n",
                data.size(), fit.coefficients[1], fit.standard_errors[1],
                wald.z, wald.p_value, perm.p_value, perm.n_perms,
                perm.n_failed_fits, perm.unreliable ? "true" : "false");
  std::cout << buf;

  if (!config.out_path.empty()) {
    nlohmann::json j;
    j["n"] = data.size();
    j["beta1_hat"] = fit.coefficients[1];
    j["se_beta1"] = fit.standard_errors[1];
    j["wald_z"] = wald.z;
    j["wald_p"] = wald.p_value;
    j["permutation_p"] = perm.p_value;
    j["n_perm"] = perm.n_perms;
    j["n_failed_fits"] = perm.n_failed_fits;
    j["unreliable"] = perm.unreliable;
    j["seed"] = config.seed;
    write_file(config.out_path, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_plot(const RunConfig& config) {
  std::ifstream in(config.input_path);
  if (!in) {
    throw std::invalid_argument("cannot open input '" + config.input_path + "'");
  }
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("empty input file");
  }
  if (!header.empty() && header.back() == '\r') header.pop_back();
  in.seekg(0);

  // Render fully before touching the output path so a bad input never
  // leaves a truncated file behind.
  std::string svg;
  if (header == kResultsHeader) {
    const auto rows = read_results_csv(in);
    svg = render_rates_svg(rows, config.window);
  } else if (header == kBiasHeader) {
    const auto records = read_bias_csv(in);
    svg = render_bias_svg(records);
  } else {
    throw std::invalid_argument("unrecognized CSV schema: '" + header + "'");
  }

  write_file(config.out_path, svg);
  std::cout << "wrote " << config.out_path << "\n";
  return 0;
}

}  // namespace poisperm::cli
