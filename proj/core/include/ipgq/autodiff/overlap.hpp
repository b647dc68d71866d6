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

#include <span>

#include <Eigen/Dense>

#include "ipgq/sim/circuit.hpp"

namespace ipgq {

/// z(theta) = scale * sum_c <bra_c | U(theta) input_c> and its derivatives.
struct OverlapJet {
  Complex value;
  Eigen::VectorXcd gradient;  // dz / d theta_k
  Eigen::MatrixXcd hessian;   // empty unless requested
};

enum class DerivativeOrder { Value = 0, Gradient = 1, Hessian = 2 };

/// Adjoint sweep: one forward pass keeps the state after each parameterized
/// gate, one backward pass keeps the bra pulled back to the same positions,
/// and the Hessian pushes each inserted state forward once. Agrees with the
/// contraction of the explicit jets in jet.hpp to rounding.
///
/// `bra` and `input` are 2^q x m batches (m = 1 for states, 2^q for unitaries).
OverlapJet overlap_jet(std::span<const GateSpec> gates, const ParameterVector& params,
                       const Eigen::MatrixXcd& bra, const Eigen::MatrixXcd& input, int num_qubits,
                       double scale, DerivativeOrder order);

}  // namespace ipgq
