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

#include "ipgq/autodiff/overlap.hpp"

#include <stdexcept>
#include <vector>

namespace ipgq {

namespace {

// sum_{i,c} conj(a_ic) b_ic
Complex frobenius_dot(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a.array().conjugate() * b.array()).sum();
}

}  // namespace

OverlapJet overlap_jet(std::span<const GateSpec> gates, const ParameterVector& params,
                       const Eigen::MatrixXcd& bra, const Eigen::MatrixXcd& input, int num_qubits,
                       double scale, DerivativeOrder order) {
  validate_circuit(gates, params, num_qubits);
  if (bra.rows() != input.rows() || bra.cols() != input.cols() ||
      static_cast<std::size_t>(input.rows()) != dimension_for(num_qubits)) {
    throw std::invalid_argument("overlap_jet: bra/input shape mismatch");
  }
  const int q = num_qubits;
  const std::size_t n_params = params.size();
  const std::size_t n_gates = gates.size();

  OverlapJet jet{};
  if (order == DerivativeOrder::Value) {
    Eigen::MatrixXcd x = input;
    kernels::run_range(x, q, gates, params, 0, n_gates);
    jet.value = scale * frobenius_dot(bra, x);
    return jet;
  }

  std::vector<std::size_t> pos;
  for (std::size_t p = 0; p < n_gates; ++p) {
    if (gates[p].is_parameterized()) pos.push_back(p);
  }
  const std::size_t n_slots = pos.size();

  std::vector<Eigen::MatrixXcd> after(n_slots);
  Eigen::MatrixXcd x = input;
  std::size_t cursor = 0;
  for (std::size_t a = 0; a < n_slots; ++a) {
    kernels::run_range(x, q, gates, params, cursor, pos[a] + 1);
    cursor = pos[a] + 1;
    after[a] = x;
  }
  kernels::run_range(x, q, gates, params, cursor, n_gates);
  jet.value = scale * frobenius_dot(bra, x);

  // pulled[a] = (-iP_a/2)^dagger (G_L ... G_{p_a + 1})^dagger bra, so that
  // <pulled[a] | y> is the overlap with the generator inserted after gate p_a.
  std::vector<Eigen::MatrixXcd> pulled(n_slots);
  Eigen::MatrixXcd lam = bra;
  std::size_t next = n_gates;
  for (std::size_t a = n_slots; a-- > 0;) {
    for (std::size_t p = next; p-- > pos[a] + 1;) {
      const GateSpec& g = gates[p];
      kernels::apply(lam, q, g, g.is_rotation() ? resolve_angle(g, params) : 0.0, true);
    }
    next = pos[a] + 1;
    // generator is anti-Hermitian: its adjoint is its negative
    Eigen::MatrixXcd gl = lam;
    kernels::generator(gl, q, gates[pos[a]]);
    pulled[a] = -gl;
  }

  jet.gradient = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n_params));
  for (std::size_t a = 0; a < n_slots; ++a) {
    jet.gradient[static_cast<Eigen::Index>(gates[pos[a]].param_index())] += scale * frobenius_dot(pulled[a], after[a]);
  }
  if (order != DerivativeOrder::Hessian) return jet;

  const auto np = static_cast<Eigen::Index>(n_params);
  jet.hessian = Eigen::MatrixXcd::Zero(np, np);
  auto add = [&](std::size_t a, std::size_t b, Complex v) {
    const auto j = static_cast<Eigen::Index>(gates[pos[a]].param_index());
    const auto k = static_cast<Eigen::Index>(gates[pos[b]].param_index());
    // (j, k) and (k, j) see the same additions in the same order, so the
    // result is exactly symmetric.
    jet.hessian(j, k) += v;
    if (a != b) jet.hessian(k, j) += v;
  };
  for (std::size_t a = 0; a < n_slots; ++a) {
    add(a, a, -0.25 * jet.value);
    Eigen::MatrixXcd y = after[a];
    kernels::generator(y, q, gates[pos[a]]);
    std::size_t at = pos[a] + 1;
    for (std::size_t b = a + 1; b < n_slots; ++b) {
      kernels::run_range(y, q, gates, params, at, pos[b] + 1);
      at = pos[b] + 1;
      add(a, b, scale * frobenius_dot(pulled[b], y));
    }
  }
  return jet;
}

}  // namespace ipgq
