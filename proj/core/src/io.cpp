// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace poisperm {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
T parse_as(const std::string& field, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                ": cannot parse '" + field + "'");
  }
  return value;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::string expect_header(std::istream& in, const char* header) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("CSV: empty input");
  }
  strip_cr(line);
  if (line != header) {
    throw std::invalid_argument(std::string("CSV: expected header '") + header +
                                "', got '" + line + "'");
  }
  return line;
}

}  // namespace

void write_results_csv(std::ostream& out,
                       const std::vector<TypeIErrorEstimate>& estimates,
                       std::uint64_t master_seed) {
  out << kResultsHeader << '\n';
  char buf[128];
  for (const TypeIErrorEstimate& e : estimates) {
    out << to_string(e.scenario.kind) << ',' << e.scenario.params_string()
        << ',' << e.n << ',' << to_string(e.method) << ',' << e.K << ','
        << e.n_perm << ',' << e.rejections;
    std::snprintf(buf, sizeof buf, ",%.6f,%.6f,%.6f", e.rate, e.ci_lo, e.ci_hi);
    out << buf << ',' << e.n_failed << ',' << master_seed << '\n';
  }
}

std::vector<ResultRow> read_results_csv(std::istream& in) {
  expect_header(in, kResultsHeader);
  std::vector<ResultRow> rows;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 12) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": expected 12 fields");
    }
    ResultRow row;
    row.scenario = f[0];
    row.kind_params = f[1];
    row.n = parse_as<long long>(f[2], line_no);
    row.method = f[3];
    row.K = parse_as<long long>(f[4], line_no);
    row.n_perm = parse_as<int>(f[5], line_no);
    row.rejections = parse_as<long long>(f[6], line_no);
    row.rate = parse_as<double>(f[7], line_no);
    row.ci_lo = parse_as<double>(f[8], line_no);
    row.ci_hi = parse_as<double>(f[9], line_no);
    row.n_failed = parse_as<long long>(f[10], line_no);
    row.master_seed = parse_as<std::uint64_t>(f[11], line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_bias_csv(std::ostream& out, const std::vector<BiasRecord>& records) {
  out << kBiasHeader << '\n';
  char buf[64];
  for (const BiasRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%lld,%lld,%.12g", r.n, r.replicate, r.bias);
    out << buf << '\n';
  }
}

std::vector<BiasRecord> read_bias_csv(std::istream& in) {
  expect_header(in, kBiasHeader);
  std::vector<BiasRecord> records;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 3) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": expected 3 fields");
    }
    BiasRecord r;
    r.n = parse_as<long long>(f[0], line_no);
    r.replicate = parse_as<long long>(f[1], line_no);
    r.bias = parse_as<double>(f[2], line_no);
    records.push_back(r);
  }
  return records;
}

}  // namespace poisperm
