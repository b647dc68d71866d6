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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipgq/ansatz/ansatz.hpp"
#include "ipgq/optim/driver.hpp"
#include "ipgq/sim/state.hpp"

namespace ipgq::bench {

enum class ExperimentKind { GhzPrep, WPrep, QftMatrixDistance, QftFrobenius };

/// "ghz", "w", "qft-matrix-distance", "qft-frobenius"
std::string_view to_string(ExperimentKind kind);
ExperimentKind experiment_from_string(std::string_view name);  // throws ConfigError

bool is_unitary_experiment(ExperimentKind kind);

/// Everything needed to reproduce one experiment. Defaults per kind:
///
///   kind                 q  layers  iterations  runs  optimizers
///   ghz                  5  3       32          3     gd adam ipg
///   w                    4  3       64          2     gd adam lbfgs ipg
///   qft-matrix-distance  3  5       80          4     lbfgs adam ipg
///   qft-frobenius        3  5       64          4     lbfgs adam ipg
///
/// State experiments start from |0...0> and use the chain-every-layer
/// entangler; QFT experiments use ring-strided.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::GhzPrep;
  int num_qubits = 5;
  int num_layers = 3;
  EntanglerPattern entangler = EntanglerPattern::ChainEveryLayer;
  std::vector<optim::AlgorithmSettings> optimizers;
  int iterations = 32;
  int n_runs = 3;
  std::uint64_t base_seed = 1;
  bool shared_init = true;  // every optimizer's run r starts from the same draw
  GhzSign ghz_sign = GhzSign::Minus;
  std::size_t histogram_samples = 1000;  // QFT kinds only
  std::optional<double> tolerance;
  bool grow_layers = false;  // retry with layers + 2 while best cost > grow_threshold
  double grow_threshold = 1e-5;
  int max_layers = 9;
  std::string output_dir;  // empty: caller decides
};

ExperimentConfig default_config(ExperimentKind kind);

/// Throws ConfigError.
void validate(const ExperimentConfig& config);

/// Parses the JSON config format. Missing fields take the defaults of the
/// named experiment, so {"experiment": "w"} is a complete config.
ExperimentConfig config_from_json(std::string_view text);
std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Seed of run `run` for optimizer number `optimizer_index`.
std::uint64_t run_seed(const ExperimentConfig& config, std::size_t optimizer_index, int run);

}  // namespace ipgq::bench
