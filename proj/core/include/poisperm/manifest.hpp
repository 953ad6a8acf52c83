// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "poisperm/harness.hpp"

namespace poisperm {

/// Run provenance written next to every results CSV. Everything except
/// wall_seconds is deterministic for a fixed config and seed.
struct RunManifest {
  std::map<std::string, std::string> config;  // echo of the effective config
  std::vector<long long> realized_grid;
  WorkloadStats workload;
  double wall_seconds = 0.0;
};

void write_manifest(std::ostream& out, const RunManifest& manifest);

}  // namespace poisperm
