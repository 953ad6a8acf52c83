// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "poisperm/harness.hpp"

namespace poisperm {

/// One parsed row of a results CSV. Matches the writer's schema:
/// scenario,kind_params,n,method,K,N_perm,rejections,rate,ci_lo,ci_hi,
/// n_failed,master_seed
struct ResultRow {
  std::string scenario;
  std::string kind_params;
  long long n = 0;
  std::string method;
  long long K = 0;
  int n_perm = 0;
  long long rejections = 0;
  double rate = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  long long n_failed = 0;
  std::uint64_t master_seed = 0;
};

void write_results_csv(std::ostream& out,
                       const std::vector<TypeIErrorEstimate>& estimates,
                       std::uint64_t master_seed);

std::vector<ResultRow> read_results_csv(std::istream& in);

void write_bias_csv(std::ostream& out, const std::vector<BiasRecord>& records);

std::vector<BiasRecord> read_bias_csv(std::istream& in);

/// First header line of each schema, used to sniff CSV kinds.
inline constexpr char kResultsHeader[] =
    "scenario,kind_params,n,method,K,N_perm,rejections,rate,ci_lo,ci_hi,"
    "n_failed,master_seed";
inline constexpr char kBiasHeader[] = "n,replicate,bias";

}  // namespace poisperm
