// Copyright 2026 The ipgq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ipgq/bench/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>

#include "ipgq/bench/export.hpp"

namespace ipgq::bench {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kLeft = 70;
constexpr double kRight = 130;  // legend column
constexpr double kTop = 40;
constexpr double kBottom = 50;

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(const char* pattern, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_cost_plot(std::span<const PlotSeries> series, const std::string& title) {
  std::size_t max_len = 1;
  double lo = 0, hi = 0;
  bool any = false;
  for (const auto& s : series) {
    max_len = std::max(max_len, s.values.size());
    for (double v : s.values) {
      const double l = std::log10(std::max(std::isfinite(v) ? v : 1.0, kPlotFloor));
      lo = any ? std::min(lo, l) : l;
      hi = any ? std::max(hi, l) : l;
      any = true;
    }
  }
  lo = std::floor(lo);
  hi = std::ceil(hi);
  if (hi <= lo) hi = lo + 1;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const double x_span = max_len > 1 ? static_cast<double>(max_len - 1) : 1.0;
  auto px = [&](std::size_t t) { return kLeft + pw * static_cast<double>(t) / x_span; };
  auto py = [&](double v) {
    const double l = std::log10(std::max(std::isfinite(v) ? v : 1.0, kPlotFloor));
    return kTop + ph * (hi - l) / (hi - lo);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt("%.0f", kWidth) + "\" height=\"" +
         fmt("%.0f", kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt("%.1f", kLeft + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" +
         escape(title) + "</text>\n";
  out += "<rect x=\"" + fmt("%.1f", kLeft) + "\" y=\"" + fmt("%.1f", kTop) + "\" width=\"" + fmt("%.1f", pw) +
         "\" height=\"" + fmt("%.1f", ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  // Decade ticks, thinned so at most ~8 labels appear.
  const int decades = static_cast<int>(hi - lo);
  const int step = std::max(1, (decades + 7) / 8);
  for (int d = 0; d <= decades; d += step) {
    const double e = lo + d;
    const double y = kTop + ph * (hi - e) / (hi - lo);
    out += "<line x1=\"" + fmt("%.1f", kLeft - 4) + "\" y1=\"" + fmt("%.2f", y) + "\" x2=\"" +
           fmt("%.1f", kLeft) + "\" y2=\"" + fmt("%.2f", y) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt("%.1f", kLeft - 8) + "\" y=\"" + fmt("%.2f", y + 4) +
           "\" text-anchor=\"end\">1e" + std::to_string(static_cast<int>(e)) + "</text>\n";
  }
  const std::size_t x_step = std::max<std::size_t>(1, (max_len + 7) / 8);
  for (std::size_t t = 0; t < max_len; t += x_step) {
    const double x = px(t);
    out += "<text x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.1f", kTop + ph + 18) +
           "\" text-anchor=\"middle\">" + std::to_string(t) + "</text>\n";
  }
  out += "<text x=\"" + fmt("%.1f", kLeft + pw / 2) + "\" y=\"" + fmt("%.1f", kHeight - 10) +
         "\" text-anchor=\"middle\">iteration</text>\n";
  out += "<text x=\"16\" y=\"" + fmt("%.1f", kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fmt("%.1f", kTop + ph / 2) + ")\">cost</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    std::string points;
    for (std::size_t t = 0; t < series[i].values.size(); ++t) {
      if (!points.empty()) points += ' ';
      points += fmt("%.2f", px(t)) + ',' + fmt("%.2f", py(series[i].values[t]));
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"" +
           points + "\"/>\n";
    const double ly = kTop + 14 + 18 * static_cast<double>(i);
    const double lx = kWidth - kRight + 12;
    out += "<line x1=\"" + fmt("%.1f", lx) + "\" y1=\"" + fmt("%.1f", ly - 4) + "\" x2=\"" + fmt("%.1f", lx + 20) +
           "\" y2=\"" + fmt("%.1f", ly - 4) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fmt("%.1f", lx + 26) + "\" y=\"" + fmt("%.1f", ly) + "\">" + escape(series[i].label) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

bool emit_plot(const AggregateRecord& record, const std::filesystem::path& path) {
  std::vector<PlotSeries> series;
  for (const auto& r : record.results) {
    if (!r.best.cost_history.empty()) series.push_back({r.algorithm, r.best.cost_history});
  }
  if (series.empty()) {
    std::cerr << "warning: nothing to plot, skipping " << path.string() << '\n';
    return false;
  }
  const std::string title = std::string(to_string(record.config.kind)) + " (q=" +
                            std::to_string(record.config.num_qubits) + ", layers=" +
                            std::to_string(record.layers_used) + ")";
  write_text_file(path, render_cost_plot(series, title));
  return true;
}

}  // namespace ipgq::bench
