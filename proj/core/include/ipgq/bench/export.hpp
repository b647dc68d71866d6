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
#include <string_view>
#include <vector>

#include "ipgq/bench/experiment.hpp"

namespace ipgq::bench {

// File formats:
//   <alg>_best.csv, <alg>_average.csv   "iteration,cost" then one row per iteration
//   <alg>_fidelity.csv                   "fidelity" then one row per sample (QFT kinds)
//   <alg>_delta_theta.csv                "delta_theta" then one row per sample (QFT kinds)
//   record.json                          the full AggregateRecord
// Numbers are printed with 17 significant digits.

void write_history_csv(const std::filesystem::path& path, std::span<const double> history);
void write_column_csv(const std::filesystem::path& path, std::string_view header,
                      std::span<const double> values);

/// Writes the CSV files above into `dir` (created if needed) and returns
/// their paths. Throws IoError naming the failing path.
std::vector<std::filesystem::path> export_csv(const AggregateRecord& record,
                                              const std::filesystem::path& dir);

std::string record_to_json(const AggregateRecord& record);
AggregateRecord record_from_json(std::string_view text);

/// Writes `dir`/record.json and returns its path.
std::filesystem::path export_json(const AggregateRecord& record, const std::filesystem::path& dir);

/// Writes `text` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace ipgq::bench
