// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using poisperm::cli::RunConfig;

void add_common_options(CLI::App* sub, RunConfig& config) {
  sub->add_option("--config", config.config_path,
                  "Key=value config file mirroring the flags "
                  "(precedence: flags > config file > preset)");
  sub->add_option("--preset", config.preset,
                  "Parameter preset: paper (K=1000, N=1000, full grids) or "
                  "desk (K=200, N=200, n <= 1e4)")
      ->check(CLI::IsMember({"paper", "desk"}));
  sub->add_option("--seed", config.seed, "Master seed");
  sub->add_option("--threads", config.threads,
                  "Worker cap (0 = all cores); results do not depend on it");
}

void add_experiment_options(CLI::App* sub, RunConfig& config) {
  add_common_options(sub, config);
  sub->add_option("--k", config.k, "Replicates per grid size");
  sub->add_option("--grid", config.grid,
                  "Size grid as log10 segments lo:hi:points[,lo:hi:points]");
  sub->add_option("--alpha", config.alpha, "Nominal test level")
      ->check(CLI::Range(1e-6, 0.999999));
  sub->add_option("--out", config.out_dir, "Output directory");
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("config: cannot parse " + key + "='" + text + "'");
  }
  return value;
}

// One configurable key: its flag name and how to store a file value.
using Setter = std::function<void(const std::string&)>;

std::map<std::string, Setter> config_bindings(const std::string& command,
                                              RunConfig& c) {
  std::map<std::string, Setter> b;
  b["preset"] = [&c](const std::string& v) { c.preset = v; };
  b["seed"] = [&c](const std::string& v) {
    c.seed = parse_number<std::uint64_t>("seed", v);
  };
  b["threads"] = [&c](const std::string& v) {
    c.threads = parse_number<int>("threads", v);
  };
  if (command != "test" && command != "plot") {
    b["k"] = [&c](const std::string& v) {
      c.k = parse_number<long long>("k", v);
    };
    b["grid"] = [&c](const std::string& v) { c.grid = v; };
    b["alpha"] = [&c](const std::string& v) {
      c.alpha = parse_number<double>("alpha", v);
    };
    b["out"] = [&c](const std::string& v) { c.out_dir = v; };
  }
  if (command == "bias") {
    b["lambda"] = [&c](const std::string& v) {
      c.lambda = parse_number<double>("lambda", v);
    };
    b["threshold"] = [&c](const std::string& v) {
      c.threshold = parse_number<long long>("threshold", v);
    };
  }
  if (command == "scenario1" || command == "scenario2" ||
      command == "null-check" || command == "test") {
    b["n-perm"] = [&c](const std::string& v) {
      c.n_perm = parse_number<int>("n-perm", v);
    };
  }
  if (command == "scenario1" || command == "scenario2" ||
      command == "null-check") {
    b["methods"] = [&c](const std::string& v) { c.methods = v; };
  }
  if (command == "scenario2" || command == "null-check") {
    b["beta0"] = [&c](const std::string& v) {
      c.beta0 = parse_number<double>("beta0", v);
    };
  }
  if (command == "scenario2") {
    b["beta2"] = [&c](const std::string& v) {
      c.beta2 = parse_number<double>("beta2", v);
    };
  }
  if (command == "test") {
    b["input"] = [&c](const std::string& v) { c.input_path = v; };
    b["out"] = [&c](const std::string& v) { c.out_path = v; };
  }
  return b;
}

// Flags given on the command line shadow config-file entries.
void apply_config_file(CLI::App* sub, const std::string& command,
                       RunConfig& config) {
  const auto entries = poisperm::cli::read_config_file(config.config_path);
  const auto bindings = config_bindings(command, config);
  for (const auto& [key, value] : entries) {
    const auto binding = bindings.find(key);
    if (binding == bindings.end()) {
      throw std::invalid_argument("config: unknown key '" + key + "' for " +
                                  command);
    }
    if (sub->count("--" + key) > 0) continue;
    binding->second(value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Poisson regression Monte Carlo experiments with a permutation-based "
      "slope test"};
  app.require_subcommand(1);

  RunConfig config;

  CLI::App* bias = app.add_subcommand(
      "bias", "Censored-measurement bias study of the Poisson rate estimate");
  add_experiment_options(bias, config);
  bias->add_option("--lambda", config.lambda, "True Poisson rate")
      ->check(CLI::PositiveNumber);
  bias->add_option("--threshold", config.threshold,
                   "Counts below this are recorded as 0")
      ->check(CLI::NonNegativeNumber);

  CLI::App* scenario1 = app.add_subcommand(
      "scenario1", "Type I error sweep with a rounded-F outcome distribution");
  add_experiment_options(scenario1, config);
  scenario1->add_option("--n-perm", config.n_perm, "Permutations per replicate");
  scenario1->add_option("--methods", config.methods,
                        "Comma list of wald,permutation");

  CLI::App* scenario2 = app.add_subcommand(
      "scenario2", "Type I error sweep with an omitted predictor");
  add_experiment_options(scenario2, config);
  scenario2->add_option("--n-perm", config.n_perm, "Permutations per replicate");
  scenario2->add_option("--methods", config.methods,
                        "Comma list of wald,permutation");
  scenario2->add_option("--beta0", config.beta0, "Baseline log rate");
  scenario2->add_option("--beta2", config.beta2, "Hidden-predictor coefficient");

  CLI::App* null_check = app.add_subcommand(
      "null-check", "Calibration baseline with a correctly specified model");
  add_experiment_options(null_check, config);
  null_check->add_option("--n-perm", config.n_perm, "Permutations per replicate");
  null_check->add_option("--methods", config.methods,
                         "Comma list of wald,permutation");
  null_check->add_option("--beta0", config.beta0, "Baseline log rate");

  CLI::App* test = app.add_subcommand(
      "test", "Wald and permutation p-values for a y,x1 CSV dataset");
  add_common_options(test, config);
  test->add_option("--input", config.input_path, "Input CSV with columns y,x1")
      ->required();
  test->add_option("--n-perm", config.n_perm, "Permutations (default 1000)");
  test->add_option("--out", config.out_path, "Optional JSON report path");

  CLI::App* plot = app.add_subcommand(
      "plot", "Render a results or bias CSV as an SVG chart");
  plot->add_option("--input", config.input_path, "Results or bias CSV")
      ->required();
  plot->add_option("--out", config.out_path, "Output SVG path")->required();
  plot->add_option("--window", config.window,
                   "Odd smoothing window for the rate curves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  config.command = sub->get_name();

  try {
    using namespace poisperm::cli;
    if (!config.config_path.empty()) {
      apply_config_file(sub, config.command, config);
    }
    if (config.command == "test") {
      if (config.n_perm < 0) config.n_perm = 1000;
      return cmd_test(config);
    }
    if (config.command == "plot") return cmd_plot(config);
    apply_preset(config);
    return cmd_simulate(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
