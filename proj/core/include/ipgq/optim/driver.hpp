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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "ipgq/optim/first_order.hpp"
#include "ipgq/optim/ipg.hpp"
#include "ipgq/optim/lbfgs.hpp"
#include "ipgq/optim/objective.hpp"

namespace ipgq::optim {

struct IpgSettings {
  IpgSchedule schedule;
  PreconditionerInit init = PreconditionerInit::InverseScale;
};

using AlgorithmSettings = std::variant<GdSettings, AdamSettings, LbfgsSettings, IpgSettings>;

/// "gd", "adam", "lbfgs" or "ipg"
std::string_view algorithm_tag(const AlgorithmSettings& settings);

struct OptimizerConfig {
  AlgorithmSettings algorithm = IpgSettings{};
  int max_iterations = 32;
  std::optional<double> tolerance;  // stop once cost < tolerance
};

/// Throws ConfigError on out-of-range hyperparameters.
void validate(const OptimizerConfig& config);

struct RunRecord {
  std::uint64_t seed = 0;
  std::vector<double> cost_history;  // entry t is f(x_t); entry 0 is the initial cost
  std::vector<double> final_params;
  double wall_time_seconds = 0;
  std::string algorithm;
  std::string template_description;
  bool aborted = false;    // numerical failure; history holds the iterations before it
  bool stagnated = false;  // L-BFGS line search gave up
  std::string message;

  int iterations() const { return static_cast<int>(cost_history.size()) - 1; }
  double final_cost() const { return cost_history.back(); }
};

/// Runs the configured algorithm from `init`. Gradient-based methods request
/// gradients only (L-BFGS adds line-search values); IPG requests one Hessian
/// per iteration. Numerical failures end the run with `aborted` set, keeping
/// the history up to the last finite cost; a non-finite cost at `init`
/// throws NumericalError.
RunRecord optimize(const Objective& objective, const OptimizerConfig& config,
                   const Eigen::VectorXd& init);

using InitSampler = std::function<Eigen::VectorXd(std::uint64_t seed)>;

struct MultiRunResult {
  RunRecord best;                      // lowest final cost
  std::vector<double> average_history;  // per-iteration mean across runs
  std::vector<RunRecord> runs;          // in seed order
};

/// Run r starts from init(base_seed + r). Runs that stopped early are padded
/// with their last cost when averaging.
MultiRunResult multi_run(const Objective& objective, const OptimizerConfig& config, int n_runs,
                         std::uint64_t base_seed, const InitSampler& init);

}  // namespace ipgq::optim
