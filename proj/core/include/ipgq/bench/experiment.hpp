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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipgq/bench/config.hpp"
#include "ipgq/cost/cost.hpp"
#include "ipgq/cost/diagnostics.hpp"
#include "ipgq/optim/driver.hpp"

namespace ipgq::bench {

std::string_view toolkit_version();

struct OptimizerResult {
  std::string algorithm;
  optim::RunRecord best;
  std::vector<double> average_history;
  std::vector<optim::RunRecord> runs;
  std::vector<double> output_probabilities;   // |amplitude|^2 of the best run; state kinds
  std::optional<FidelitySamples> histogram;   // best run vs target; QFT kinds
};

struct AggregateRecord {
  ExperimentConfig config;
  int layers_used = 0;
  std::vector<OptimizerResult> results;  // in config.optimizers order
  std::string version;
  bool failed = false;  // some run aborted numerically
  std::string failure;

  const OptimizerResult* find(std::string_view algorithm) const;
};

/// Cost function of the experiment at the given depth.
CostFunction make_cost(const ExperimentConfig& config, int num_layers);

/// Runs every configured optimizer n_runs times and aggregates. Writes no
/// files. Throws ConfigError on an invalid config; numerical aborts are
/// reported through `failed`.
AggregateRecord run_experiment(const ExperimentConfig& config);

}  // namespace ipgq::bench
