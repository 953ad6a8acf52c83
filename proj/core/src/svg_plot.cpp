// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace poisperm {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 180.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 55.0;

const char* kPalette[] = {"#1f6fb4", "#d95f02", "#1b9e77", "#7570b3",
                          "#e7298a", "#66a61e"};

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

struct Scale {
  double lo, hi, pix_lo, pix_hi;
  [[nodiscard]] double operator()(double v) const {
    return pix_lo + (v - lo) / (hi - lo) * (pix_hi - pix_lo);
  }
};

void open_svg(std::string& s) {
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth, "%.0f") +
       "\" height=\"" + fmt(kHeight, "%.0f") + "\" viewBox=\"0 0 " +
       fmt(kWidth, "%.0f") + " " + fmt(kHeight, "%.0f") + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void text_at(std::string& s, double x, double y, const std::string& msg,
             const char* anchor = "middle", const char* size = "12") {
  s += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-size=\"" + size +
       "\" font-family=\"sans-serif\" text-anchor=\"" + anchor + "\">" + msg +
       "</text>\n";
}

void line(std::string& s, double x1, double y1, double x2, double y2,
          const std::string& style) {
  s += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
       "\" y2=\"" + fmt(y2) + "\" " + style + "/>\n";
}

void axes(std::string& s) {
  const std::string style = "stroke=\"black\" stroke-width=\"1\"";
  line(s, kMarginLeft, kHeight - kMarginBottom, kWidth - kMarginRight,
       kHeight - kMarginBottom, style);
  line(s, kMarginLeft, kMarginTop, kMarginLeft, kHeight - kMarginBottom, style);
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
  // Linear interpolation between order statistics (type 7).
  const double h = q * (static_cast<double>(sorted.size()) - 1.0);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::string render_rates_svg(const std::vector<ResultRow>& rows,
                             int smooth_window) {
  if (rows.empty()) {
    throw std::invalid_argument("render_rates_svg: no data rows");
  }

  double lx_min = 1e300, lx_max = -1e300, y_max = 0.0;
  for (const ResultRow& r : rows) {
    if (r.n < 1) throw std::invalid_argument("render_rates_svg: bad n");
    const double lx = std::log10(static_cast<double>(r.n));
    lx_min = std::min(lx_min, lx);
    lx_max = std::max(lx_max, lx);
    y_max = std::max({y_max, r.rate, r.ci_hi});
  }
  if (lx_max - lx_min < 0.5) {
    lx_min -= 0.25;
    lx_max += 0.25;
  }
  y_max = std::max(y_max * 1.2, 0.1);

  const Scale sx{lx_min, lx_max, kMarginLeft, kWidth - kMarginRight};
  const Scale sy{0.0, y_max, kHeight - kMarginBottom, kMarginTop};

  std::string s;
  open_svg(s);

  // Confidence band; all rows of one results file share a K, so take the
  // band from the first row.
  const double ci_lo = rows.front().ci_lo;
  const double ci_hi = rows.front().ci_hi;
  s += "<rect x=\"" + fmt(sx(lx_min)) + "\" y=\"" + fmt(sy(ci_hi)) +
       "\" width=\"" + fmt(sx(lx_max) - sx(lx_min)) + "\" height=\"" +
       fmt(sy(ci_lo) - sy(ci_hi)) + "\" fill=\"#bbbbbb\" opacity=\"0.45\"/>\n";
  text_at(s, kMarginLeft - 8, sy(ci_lo) + 4, fmt(ci_lo, "%.4f"), "end", "11");
  text_at(s, kMarginLeft - 8, sy(ci_hi) + 4, fmt(ci_hi, "%.4f"), "end", "11");

  axes(s);
  for (int k = static_cast<int>(std::ceil(lx_min));
       k <= static_cast<int>(std::floor(lx_max)); ++k) {
    line(s, sx(k), kHeight - kMarginBottom, sx(k), kHeight - kMarginBottom + 5,
         "stroke=\"black\"");
    text_at(s, sx(k), kHeight - kMarginBottom + 20, "1e" + std::to_string(k));
  }
  for (double y : {0.0, 0.05, y_max}) {
    line(s, kMarginLeft - 5, sy(y), kMarginLeft, sy(y), "stroke=\"black\"");
    text_at(s, kMarginLeft - 8, sy(y) + 4, fmt(y, "%.2f"), "end", "11");
  }
  text_at(s, (kMarginLeft + kWidth - kMarginRight) / 2,
          kHeight - kMarginBottom + 40, "sample size");
  text_at(s, 16, kMarginTop - 10, "Type I error rate", "start");

  // Series keyed by (params, method); Wald solid circles, permutation
  // dashed crosses, one palette color per parameter setting.
  std::map<std::string, int> setting_color;
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<double, double>>>
      series;
  for (const ResultRow& r : rows) {
    const std::string setting = r.scenario + " " + r.kind_params;
    if (!setting_color.contains(setting)) {
      const int idx = static_cast<int>(setting_color.size());
      setting_color[setting] = idx % 6;
    }
    series[{setting, r.method}].push_back(
        {std::log10(static_cast<double>(r.n)), r.rate});
  }

  double legend_y = kMarginTop + 10;
  for (auto& [key, points] : series) {
    const auto& [setting, method] = key;
    const char* color = kPalette[setting_color[setting]];
    const bool dashed = method == "permutation";

    const auto smooth = smooth_rates(points, smooth_window);
    std::string poly = "<polyline fill=\"none\" stroke=\"";
    poly += color;
    poly += "\" stroke-width=\"1.5\"";
    if (dashed) poly += " stroke-dasharray=\"6,4\"";
    poly += " points=\"";
    for (const auto& [lx, rate] : smooth) {
      poly += fmt(sx(lx)) + "," + fmt(sy(rate)) + " ";
    }
    poly += "\"/>\n";
    s += poly;

    for (const auto& [lx, rate] : points) {
      if (dashed) {
        const double cx = sx(lx), cy = sy(rate);
        line(s, cx - 3, cy - 3, cx + 3, cy + 3,
             "stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\"");
        line(s, cx - 3, cy + 3, cx + 3, cy - 3,
             "stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\"");
      } else {
        s += "<circle cx=\"" + fmt(sx(lx)) + "\" cy=\"" + fmt(sy(rate)) +
             "\" r=\"3\" fill=\"none\" stroke=\"" + color + "\"/>\n";
      }
    }

    text_at(s, kWidth - kMarginRight + 12, legend_y,
            setting + " (" + method + ")", "start", "11");
    line(s, kWidth - kMarginRight + 2, legend_y - 4, kWidth - kMarginRight + 10,
         legend_y - 4, "stroke=\"" + std::string(color) + "\" stroke-width=\"2\"");
    legend_y += 16;
  }

  s += "</svg>\n";
  return s;
}

std::string render_bias_svg(const std::vector<BiasRecord>& records) {
  if (records.empty()) {
    throw std::invalid_argument("render_bias_svg: no records");
  }

  std::map<long long, std::vector<double>> by_size;
  for (const BiasRecord& r : records) by_size[r.n].push_back(r.bias);

  struct Box {
    long long n;
    double lo_whisker, q1, median, q3, hi_whisker;
  };
  std::vector<Box> boxes;
  double x_min = 0.0, x_max = 0.0;
  for (auto& [n, values] : by_size) {
    std::sort(values.begin(), values.end());
    Box b;
    b.n = n;
    b.q1 = quantile_sorted(values, 0.25);
    b.median = quantile_sorted(values, 0.5);
    b.q3 = quantile_sorted(values, 0.75);
    const double fence = 1.5 * (b.q3 - b.q1);
    b.lo_whisker = b.q1;
    b.hi_whisker = b.q3;
    for (double v : values) {
      if (v >= b.q1 - fence) {
        b.lo_whisker = v;
        break;
      }
    }
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
      if (*it <= b.q3 + fence) {
        b.hi_whisker = *it;
        break;
      }
    }
    x_min = std::min({x_min, b.lo_whisker, values.front()});
    x_max = std::max({x_max, b.hi_whisker, values.back()});
    boxes.push_back(b);
  }
  const double pad = 0.05 * (x_max - x_min + 1e-12);
  x_min -= pad;
  x_max += pad;

  const Scale sx{x_min, x_max, kMarginLeft, kWidth - 40.0};
  const double band_h = (kHeight - kMarginTop - kMarginBottom) /
                        static_cast<double>(boxes.size());

  std::string s;
  open_svg(s);
  axes(s);

  // zero-bias reference
  line(s, sx(0.0), kMarginTop, sx(0.0), kHeight - kMarginBottom,
       "stroke=\"red\" stroke-dasharray=\"5,4\"");

  for (double t = 0; t <= 4; ++t) {
    const double v = x_min + t / 4.0 * (x_max - x_min);
    line(s, sx(v), kHeight - kMarginBottom, sx(v), kHeight - kMarginBottom + 5,
         "stroke=\"black\"");
    text_at(s, sx(v), kHeight - kMarginBottom + 20, fmt(v, "%.3g"));
  }
  text_at(s, (kMarginLeft + kWidth - 40.0) / 2, kHeight - kMarginBottom + 40,
          "bias of the rate estimate");

  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes[i];
    const double cy = kMarginTop + (static_cast<double>(i) + 0.5) * band_h;
    const double h = band_h * 0.55;
    const std::string stroke = "stroke=\"#1f6fb4\" stroke-width=\"1.5\"";

    line(s, sx(b.lo_whisker), cy, sx(b.q1), cy, stroke);
    line(s, sx(b.q3), cy, sx(b.hi_whisker), cy, stroke);
    line(s, sx(b.lo_whisker), cy - h / 4, sx(b.lo_whisker), cy + h / 4, stroke);
    line(s, sx(b.hi_whisker), cy - h / 4, sx(b.hi_whisker), cy + h / 4, stroke);
    s += "<rect x=\"" + fmt(sx(b.q1)) + "\" y=\"" + fmt(cy - h / 2) +
         "\" width=\"" + fmt(sx(b.q3) - sx(b.q1)) + "\" height=\"" + fmt(h) +
         "\" fill=\"#d8e6f3\" " + stroke + "/>\n";
    line(s, sx(b.median), cy - h / 2, sx(b.median), cy + h / 2, stroke);

    text_at(s, kMarginLeft - 8, cy + 4, "n=" + std::to_string(b.n), "end", "11");
  }

  s += "</svg>\n";
  return s;
}

}  // namespace poisperm
