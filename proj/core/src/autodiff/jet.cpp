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

#include "ipgq/autodiff/jet.hpp"

namespace ipgq {

namespace {

struct BatchJet {
  Eigen::MatrixXcd value;
  std::vector<Eigen::MatrixXcd> gradient;
  std::optional<SymmetricArray<Eigen::MatrixXcd>> hessian;
};

// Positions of parameterized gates, in circuit order.
std::vector<std::size_t> parameterized_positions(std::span<const GateSpec> gates) {
  std::vector<std::size_t> pos;
  for (std::size_t p = 0; p < gates.size(); ++p) {
    if (gates[p].is_parameterized()) pos.push_back(p);
  }
  return pos;
}

BatchJet compute_jet(std::span<const GateSpec> gates, const ParameterVector& params,
                     const Eigen::MatrixXcd& input, int q, bool with_hessian) {
  validate_circuit(gates, params, q);
  const std::size_t n_params = params.size();
  const std::size_t n_gates = gates.size();
  const std::vector<std::size_t> pos = parameterized_positions(gates);
  const std::size_t n_slots = pos.size();
  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(input.rows(), input.cols());

  // State right after each parameterized gate.
  std::vector<Eigen::MatrixXcd> after(n_slots);
  Eigen::MatrixXcd x = input;
  std::size_t cursor = 0;
  for (std::size_t a = 0; a < n_slots; ++a) {
    kernels::run_range(x, q, gates, params, cursor, pos[a] + 1);
    cursor = pos[a] + 1;
    after[a] = x;
  }
  kernels::run_range(x, q, gates, params, cursor, n_gates);

  BatchJet jet{x, std::vector<Eigen::MatrixXcd>(n_params, zero), std::nullopt};

  std::vector<Eigen::MatrixXcd> slot_grad(n_slots);
  for (std::size_t a = 0; a < n_slots; ++a) {
    Eigen::MatrixXcd y = after[a];
    kernels::generator(y, q, gates[pos[a]]);
    kernels::run_range(y, q, gates, params, pos[a] + 1, n_gates);
    slot_grad[a] = std::move(y);
  }
  for (std::size_t a = 0; a < n_slots; ++a) jet.gradient[gates[pos[a]].param_index()] += slot_grad[a];

  if (!with_hessian) return jet;

  SymmetricArray<Eigen::MatrixXcd> slot_hess(n_slots, zero);
  for (std::size_t a = 0; a < n_slots; ++a) {
    slot_hess(a, a) = -0.25 * jet.value;
    Eigen::MatrixXcd y = after[a];
    kernels::generator(y, q, gates[pos[a]]);
    std::size_t at = pos[a] + 1;
    for (std::size_t b = a + 1; b < n_slots; ++b) {
      kernels::run_range(y, q, gates, params, at, pos[b] + 1);
      at = pos[b] + 1;
      Eigen::MatrixXcd z = y;
      kernels::generator(z, q, gates[pos[b]]);
      kernels::run_range(z, q, gates, params, at, n_gates);
      slot_hess(a, b) = std::move(z);
    }
  }

  // Sum over ordered slot pairs (a, b) bound to (j, k) with j <= k; the j > k
  // half is the same unordered pair seen from the other side.
  SymmetricArray<Eigen::MatrixXcd> hess(n_params, zero);
  for (std::size_t a = 0; a < n_slots; ++a) {
    for (std::size_t b = 0; b < n_slots; ++b) {
      const std::size_t j = gates[pos[a]].param_index();
      const std::size_t k = gates[pos[b]].param_index();
      if (j > k) continue;
      hess(j, k) += slot_hess(a, b);
    }
  }
  jet.hessian = std::move(hess);
  return jet;
}

}  // namespace

StateJet state_gradient(std::span<const GateSpec> gates, const ParameterVector& params,
                        const StateVector& input) {
  const int q = input.num_qubits();
  BatchJet b = compute_jet(gates, params, input.amplitudes(), q, false);
  StateJet jet{StateVector(q, b.value.col(0)), {}, std::nullopt};
  jet.gradient.reserve(b.gradient.size());
  for (auto& g : b.gradient) jet.gradient.emplace_back(q, g.col(0));
  return jet;
}

StateJet state_hessian(std::span<const GateSpec> gates, const ParameterVector& params,
                       const StateVector& input) {
  const int q = input.num_qubits();
  BatchJet b = compute_jet(gates, params, input.amplitudes(), q, true);
  StateJet jet{StateVector(q, b.value.col(0)), {}, std::nullopt};
  jet.gradient.reserve(b.gradient.size());
  for (auto& g : b.gradient) jet.gradient.emplace_back(q, g.col(0));
  const std::size_t n = params.size();
  SymmetricArray<StateVector> h(n, StateVector(q));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) h(j, k) = StateVector(q, (*b.hessian)(j, k).col(0));
  }
  jet.hessian = std::move(h);
  return jet;
}

UnitaryJet unitary_gradient(std::span<const GateSpec> gates, const ParameterVector& params,
                            int num_qubits, bool with_hessian) {
  const auto dim = static_cast<Eigen::Index>(dimension_for(num_qubits));
  BatchJet b = compute_jet(gates, params, Eigen::MatrixXcd::Identity(dim, dim), num_qubits, with_hessian);
  UnitaryJet jet{UnitaryMatrix(num_qubits, std::move(b.value)), {}, std::nullopt};
  jet.gradient.reserve(b.gradient.size());
  for (auto& g : b.gradient) jet.gradient.emplace_back(num_qubits, std::move(g));
  if (with_hessian) {
    const std::size_t n = params.size();
    SymmetricArray<UnitaryMatrix> h(n, UnitaryMatrix(num_qubits));
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j <= k; ++j) h(j, k) = UnitaryMatrix(num_qubits, (*b.hessian)(j, k));
    }
    jet.hessian = std::move(h);
  }
  return jet;
}

}  // namespace ipgq
