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

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ipgq/bench/experiment.hpp"

namespace ipgq::bench {

struct PlotSeries {
  std::string label;
  std::vector<double> values;
};

inline constexpr double kPlotFloor = 1e-16;

/// Log-scale cost-vs-iteration chart as standalone SVG text, one polyline
/// per series. Values below kPlotFloor are drawn at the floor.
std::string render_cost_plot(std::span<const PlotSeries> series, const std::string& title);

/// Plots the best history of every optimizer. Returns false and writes
/// nothing when the record has no history to draw.
bool emit_plot(const AggregateRecord& record, const std::filesystem::path& path);

}  // namespace ipgq::bench
