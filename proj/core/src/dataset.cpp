// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

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

double parse_number(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                ": cannot parse number '" + field + "'");
  }
  return value;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

void write_csv(const Dataset& data, std::ostream& out) {
  const bool hidden = data.x2_hidden.has_value();
  out << (hidden ? "y,x1,x2_hidden\n" : "y,x1\n");
  char buf[64];
  for (std::size_t i = 0; i < data.size(); ++i) {
    out << static_cast<long long>(data.y[i]);
    std::snprintf(buf, sizeof buf, ",%.17g", data.x1[i]);
    out << buf;
    if (hidden) {
      std::snprintf(buf, sizeof buf, ",%.17g", (*data.x2_hidden)[i]);
      out << buf;
    }
    out << '\n';
  }
}

Dataset read_dataset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("CSV: empty input, expected a y,x1 header");
  }
  strip_cr(line);
  bool hidden;
  if (line == "y,x1") {
    hidden = false;
  } else if (line == "y,x1,x2_hidden") {
    hidden = true;
  } else {
    throw std::invalid_argument("CSV: header must be y,x1[,x2_hidden], got '" +
                                line + "'");
  }

  Dataset data;
  if (hidden) data.x2_hidden.emplace();
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != (hidden ? 3u : 2u)) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": expected " + (hidden ? "3" : "2") +
                                  " fields");
    }
    const double y = parse_number(fields[0], line_no);
    if (!std::isfinite(y) || y < 0.0 || std::floor(y) != y) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": y must be a nonnegative integer");
    }
    data.y.push_back(y);
    data.x1.push_back(parse_number(fields[1], line_no));
    if (hidden) data.x2_hidden->push_back(parse_number(fields[2], line_no));
  }
  if (data.y.empty()) {
    throw std::invalid_argument("CSV: no data rows");
  }
  return data;
}

}  // namespace poisperm
