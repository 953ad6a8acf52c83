// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/manifest.hpp"

#include <ostream>

#include "json.hpp"
#include "poisperm/version.hpp"

namespace poisperm {

void write_manifest(std::ostream& out, const RunManifest& manifest) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["config"] = manifest.config;
  j["realized_grid"] = manifest.realized_grid;
  j["total_fits"] = manifest.workload.succeeded();
  j["fits_attempted"] = manifest.workload.fits_attempted;
  j["fits_failed"] = manifest.workload.fits_failed;
  j["fits_skipped"] = manifest.workload.fits_skipped;
  j["wall_seconds"] = manifest.wall_seconds;
  out << j.dump(2) << '\n';
}

}  // namespace poisperm
