// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "poisperm/dataset.hpp"
#include "poisperm/manifest.hpp"
#include "poisperm/rng.hpp"
#include "poisperm/scenarios.hpp"
#include "poisperm/svg_plot.hpp"
#include "poisperm/version.hpp"

using namespace poisperm;

namespace {

// Minimal well-formedness check: every opened tag is closed in order.
bool xml_balanced(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const std::size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag.front() == '?' || tag.front() == '!') continue;
    if (tag.back() == '/') continue;  // self-closing
    if (tag.front() == '/') {
      if (stack.empty()) return false;
      if (stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    const std::size_t name_end = tag.find_first_of(" \t\n");
    stack.push_back(tag.substr(0, name_end));
  }
  return stack.empty();
}

std::vector<TypeIErrorEstimate> sample_estimates() {
  std::vector<TypeIErrorEstimate> estimates;
  const auto spec = ScenarioSpec::omitted_predictor(0.5, 0.8);
  const auto [lo, hi] = binomial_band(1000, 0.05);
  int i = 0;
  for (long long n : {10, 100, 1000, 10000}) {
    for (Method m : {Method::wald, Method::permutation}) {
      TypeIErrorEstimate e;
      e.scenario = spec;
      e.n = n;
      e.method = m;
      e.K = 1000;
      e.n_perm = m == Method::permutation ? 500 : 0;
      e.rejections = 40 + 7 * i++;
      e.rate = static_cast<double>(e.rejections) / 1000.0;
      e.ci_lo = lo;
      e.ci_hi = hi;
      e.alpha = 0.05;
      e.n_failed = i == 1 ? 2 : 0;
      estimates.push_back(e);
    }
  }
  return estimates;
}

}  // namespace

TEST_CASE("dataset CSV round trip") {
  Dataset data;
  data.y = {0, 3, 1};
  data.x1 = {-1.25, 0.5, 2.0};

  std::ostringstream out;
  write_csv(data, out);
  std::istringstream in(out.str());
  const Dataset back = read_dataset_csv(in);
  CHECK(back.y == data.y);
  CHECK(back.x1 == data.x1);
  CHECK(!back.x2_hidden.has_value());

  data.x2_hidden = std::vector<double>{0.1, -0.2, 0.3};
  std::ostringstream out2;
  write_csv(data, out2);
  std::istringstream in2(out2.str());
  const Dataset back2 = read_dataset_csv(in2);
  CHECK(back2.x2_hidden == data.x2_hidden);
}

TEST_CASE("dataset CSV rejects malformed input") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_dataset_csv(in), std::invalid_argument);
  };
  reject("");
  reject("y,x2\n1,2\n");
  reject("y,x1\n");             // no rows
  reject("y,x1\n1\n");          // missing field
  reject("y,x1\n-1,0.5\n");     // negative count
  reject("y,x1\n1.5,0.5\n");    // fractional count
  reject("y,x1\nabc,0.5\n");    // not a number
}

TEST_CASE("results CSV round trip") {
  const auto estimates = sample_estimates();
  std::ostringstream out;
  write_results_csv(out, estimates, 424242);

  std::istringstream in(out.str());
  const auto rows = read_results_csv(in);
  REQUIRE(rows.size() == estimates.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].scenario == "omitted_predictor");
    CHECK(rows[i].kind_params == "beta0=0.5;beta2=0.8");
    CHECK(rows[i].n == estimates[i].n);
    CHECK(rows[i].method == to_string(estimates[i].method));
    CHECK(rows[i].K == estimates[i].K);
    CHECK(rows[i].n_perm == estimates[i].n_perm);
    CHECK(rows[i].rejections == estimates[i].rejections);
    CHECK(rows[i].rate == doctest::Approx(estimates[i].rate).epsilon(1e-9));
    CHECK(rows[i].n_failed == estimates[i].n_failed);
    CHECK(rows[i].master_seed == 424242);
  }

  std::istringstream bad("not,a,results,file\n");
  CHECK_THROWS_AS(read_results_csv(bad), std::invalid_argument);
}

TEST_CASE("bias CSV round trip") {
  const std::vector<BiasRecord> records = {
      {10, 0, -0.125}, {10, 1, 0.5}, {100, 0, -0.03368973499542734}};
  std::ostringstream out;
  write_bias_csv(out, records);
  std::istringstream in(out.str());
  const auto back = read_bias_csv(in);
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(back[i].n == records[i].n);
    CHECK(back[i].replicate == records[i].replicate);
    CHECK(back[i].bias == doctest::Approx(records[i].bias).epsilon(1e-10));
  }
}

TEST_CASE("manifest JSON carries the workload identity") {
  RunManifest manifest;
  manifest.config = {{"command", "scenario2"}, {"seed", "42"}};
  manifest.realized_grid = {10, 100, 1000};
  manifest.workload = {5000, 3, 40};
  manifest.wall_seconds = 1.5;

  std::ostringstream out;
  write_manifest(out, manifest);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["version"] == kVersion);
  CHECK(j["config"]["command"] == "scenario2");
  CHECK(j["realized_grid"].size() == 3);
  CHECK(j["fits_attempted"] == 5000);
  CHECK(j["fits_failed"] == 3);
  CHECK(j["fits_skipped"] == 40);
  CHECK(j["total_fits"] == 4997);
  CHECK(j.contains("wall_seconds"));
}

TEST_CASE("rates SVG labels the band edges and balances tags") {
  std::ostringstream csv;
  write_results_csv(csv, sample_estimates(), 1);
  std::istringstream in(csv.str());
  const auto rows = read_results_csv(in);

  const std::string svg = render_rates_svg(rows, 3);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("0.0362") != std::string::npos);  // K = 1000 band edges
  CHECK(svg.find("0.0638") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);   // wald markers
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // permutation curve
  CHECK(xml_balanced(svg));

  CHECK_THROWS_AS(render_rates_svg({}, 3), std::invalid_argument);
}

TEST_CASE("bias SVG draws the zero reference and balances tags") {
  std::vector<BiasRecord> records;
  StreamRng rng(SeedPath{606});
  for (long long n : {10, 100, 1000}) {
    for (long long r = 0; r < 80; ++r) {
      records.push_back({n, r, rng.normal() / std::sqrt(static_cast<double>(n))});
    }
  }
  const std::string svg = render_bias_svg(records);
  CHECK(svg.find("stroke=\"red\"") != std::string::npos);
  CHECK(svg.find("n=1000") != std::string::npos);
  CHECK(xml_balanced(svg));
  CHECK_THROWS_AS(render_bias_svg({}), std::invalid_argument);
}
