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

#include "ipgq/bench/experiment.hpp"

#include <algorithm>
#include <future>
#include <limits>

#include "ipgq/ansatz/ansatz.hpp"
#include "ipgq/errors.hpp"

#ifndef IPGQ_VERSION
#define IPGQ_VERSION "0.0.0"
#endif

namespace ipgq::bench {

std::string_view toolkit_version() { return IPGQ_VERSION; }

const OptimizerResult* AggregateRecord::find(std::string_view algorithm) const {
  for (const auto& r : results) {
    if (r.algorithm == algorithm) return &r;
  }
  return nullptr;
}

CostFunction make_cost(const ExperimentConfig& config, int num_layers) {
  const CircuitTemplate tmpl(config.num_qubits, num_layers, config.entangler);
  const int q = config.num_qubits;
  switch (config.kind) {
    case ExperimentKind::GhzPrep:
      return CostFunction::state_infidelity(tmpl, ghz_state(q, config.ghz_sign), basis_state(q, 0));
    case ExperimentKind::WPrep:
      return CostFunction::state_infidelity(tmpl, w_state(q), basis_state(q, 0));
    case ExperimentKind::QftMatrixDistance:
      return CostFunction::matrix_distance(tmpl, qft_unitary(q));
    case ExperimentKind::QftFrobenius:
      return CostFunction::frobenius_infidelity(tmpl, qft_unitary(q));
  }
  throw ConfigError("unknown experiment kind");
}

namespace {

AggregateRecord run_at_depth(const ExperimentConfig& config, int num_layers) {
  const CostFunction cost = make_cost(config, num_layers);
  const CircuitTemplate& tmpl = cost.circuit_template();

  AggregateRecord record;
  record.config = config;
  record.layers_used = num_layers;
  record.version = std::string(toolkit_version());

  const optim::InitSampler init = [&tmpl](std::uint64_t seed) { return random_init(tmpl, seed).values(); };

  // One task per optimizer; results are collected in configuration order.
  std::vector<std::future<optim::MultiRunResult>> tasks;
  for (std::size_t i = 0; i < config.optimizers.size(); ++i) {
    const optim::OptimizerConfig oc{config.optimizers[i], config.iterations, config.tolerance};
    tasks.push_back(std::async(std::launch::async, [&cost, &config, &init, oc, i] {
      return optim::multi_run(cost, oc, config.n_runs, run_seed(config, i, 0), init);
    }));
  }

  for (std::size_t i = 0; i < config.optimizers.size(); ++i) {
    optim::MultiRunResult mr = tasks[i].get();
    OptimizerResult result;
    result.algorithm = std::string(optim::algorithm_tag(config.optimizers[i]));
    for (const auto& run : mr.runs) {
      if (run.aborted && !record.failed) {
        record.failed = true;
        record.failure = result.algorithm + " seed " + std::to_string(run.seed) + ": " + run.message;
      }
    }
    const ParameterVector best(Eigen::Map<const Eigen::VectorXd>(
        mr.best.final_params.data(), static_cast<Eigen::Index>(mr.best.final_params.size())));
    if (is_unitary_experiment(config.kind)) {
      result.histogram = fidelity_histogram(cost.gates(), best, cost.target_unitary(),
                                            config.histogram_samples, config.base_seed);
    } else {
      const StateVector out = run_circuit(cost.gates(), best, cost.input_state());
      result.output_probabilities.reserve(out.dim());
      for (Eigen::Index k = 0; k < out.amplitudes().size(); ++k) {
        result.output_probabilities.push_back(std::norm(out.amplitudes()[k]));
      }
    }
    result.best = std::move(mr.best);
    result.average_history = std::move(mr.average_history);
    result.runs = std::move(mr.runs);
    record.results.push_back(std::move(result));
  }
  return record;
}

double best_final_cost(const AggregateRecord& record) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : record.results) best = std::min(best, r.best.final_cost());
  return best;
}

}  // namespace

AggregateRecord run_experiment(const ExperimentConfig& config) {
  validate(config);
  AggregateRecord record = run_at_depth(config, config.num_layers);
  if (!config.grow_layers) return record;
  int layers = config.num_layers;
  while (best_final_cost(record) > config.grow_threshold && layers + 2 <= config.max_layers) {
    layers += 2;
    record = run_at_depth(config, layers);
  }
  return record;
}

}  // namespace ipgq::bench
