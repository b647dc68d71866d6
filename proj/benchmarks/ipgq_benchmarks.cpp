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

#include <benchmark/benchmark.h>

#include "ipgq/ansatz/ansatz.hpp"
#include "ipgq/autodiff/jet.hpp"
#include "ipgq/cost/cost.hpp"
#include "ipgq/optim/ipg.hpp"
#include "ipgq/sim/circuit.hpp"
#include "ipgq/sim/state.hpp"

namespace {

using ipgq::CircuitTemplate;
using ipgq::CostFunction;
using ipgq::ParameterVector;

void BM_RunCircuit(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const CircuitTemplate tmpl(q, 3);
  const auto gates = ipgq::gate_list(tmpl);
  const ParameterVector params = ipgq::random_init(tmpl, 1);
  const ipgq::StateVector input = ipgq::basis_state(q, 0);
  for (auto _ : state) benchmark::DoNotOptimize(ipgq::run_circuit(gates, params, input));
}
BENCHMARK(BM_RunCircuit)->DenseRange(3, 11, 2);

void BM_StateHessianExplicit(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const CircuitTemplate tmpl(q, 3);
  const auto gates = ipgq::gate_list(tmpl);
  const ParameterVector params = ipgq::random_init(tmpl, 1);
  const ipgq::StateVector input = ipgq::basis_state(q, 0);
  for (auto _ : state) benchmark::DoNotOptimize(ipgq::state_hessian(gates, params, input));
}
BENCHMARK(BM_StateHessianExplicit)->DenseRange(3, 5, 1);

CostFunction make_cost(int kind, int q, int layers) {
  const CircuitTemplate tmpl(q, layers);
  switch (kind) {
    case 0:
      return CostFunction::state_infidelity(tmpl, ipgq::ghz_state(q, ipgq::GhzSign::Minus),
                                            ipgq::basis_state(q, 0));
    case 1:
      return CostFunction::matrix_distance(tmpl, ipgq::qft_unitary(q));
    default:
      return CostFunction::frobenius_infidelity(tmpl, ipgq::qft_unitary(q));
  }
}

// range(0): 0 state infidelity, 1 matrix distance, 2 Frobenius; range(1): qubits
void BM_CostGradient(benchmark::State& state) {
  const CostFunction f = make_cost(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 3);
  const ParameterVector params = ipgq::random_init(f.circuit_template(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(f.gradient(params));
}
BENCHMARK(BM_CostGradient)->ArgsProduct({{0, 1, 2}, {3, 5}});

void BM_CostHessian(benchmark::State& state) {
  const CostFunction f = make_cost(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 3);
  const ParameterVector params = ipgq::random_init(f.circuit_template(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(f.hessian(params));
}
BENCHMARK(BM_CostHessian)->ArgsProduct({{0, 1, 2}, {3, 5}});

void BM_IpgStep(benchmark::State& state) {
  const CostFunction f = make_cost(0, static_cast<int>(state.range(0)), 3);
  const ParameterVector params = ipgq::random_init(f.circuit_template(), 1);
  const Eigen::VectorXd g = f.gradient(params);
  const Eigen::MatrixXd h = f.hessian(params);
  const ipgq::optim::IpgSchedule schedule;
  for (auto _ : state) {
    const auto sched = ipgq::optim::ipg_schedule(h, schedule);
    ipgq::optim::IpgState s{params.values(),
                            ipgq::optim::initial_preconditioner(ipgq::optim::PreconditionerInit::InverseScale, h.rows(), sched), 0};
    benchmark::DoNotOptimize(ipgq::optim::ipg_step(s, g, h, sched));
  }
}
BENCHMARK(BM_IpgStep)->DenseRange(3, 7, 2);

}  // namespace

BENCHMARK_MAIN();
