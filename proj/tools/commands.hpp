// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace poisperm::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240313;

/// Effective configuration of one invocation, after preset resolution.
/// Sentinels (-1 / empty) mean "take the preset value".
struct RunConfig {
  std::string command;
  std::string preset = "desk";
  std::uint64_t seed = kDefaultSeed;
  long long k = -1;
  int n_perm = -1;
  std::string grid;
  double alpha = 0.05;
  double beta0 = 0.3;
  double beta2 = 0.7;
  double lambda = 5.0;
  long long threshold = 2;
  std::string methods;  // comma list: wald,permutation
  int threads = 0;
  std::string out_dir = ".";

  // test / plot
  std::string input_path;
  std::string out_path;
  int window = 5;

  std::string config_path;
};

/// Parses a `key=value` config file ('#' starts a comment). Returns the
/// entries in file order, last occurrence of a key winning.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Fills k, n_perm, grid, and methods from the preset where unset.
void apply_preset(RunConfig& config);

int cmd_simulate(const RunConfig& config);  // bias/scenario1/scenario2/null-check
int cmd_test(const RunConfig& config);
int cmd_plot(const RunConfig& config);

}  // namespace poisperm::cli
