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
#include <span>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

#include "ipgq/sim/state.hpp"

namespace ipgq {

enum class GateKind { RZ, RY, CNOT };

std::string_view gate_name(GateKind kind);

/// Refers to entry `index` of a ParameterVector.
struct ParamRef {
  std::size_t index;
  bool operator==(const ParamRef&) const = default;
};

/// A rotation angle is either fixed (radians) or bound to a parameter.
using AngleSource = std::variant<double, ParamRef>;

struct GateSpec {
  GateKind kind;
  int target;
  int control = -1;  // CNOT only
  AngleSource angle = 0.0;

  static GateSpec rz(int qubit, AngleSource angle) { return {GateKind::RZ, qubit, -1, angle}; }
  static GateSpec ry(int qubit, AngleSource angle) { return {GateKind::RY, qubit, -1, angle}; }
  static GateSpec cnot(int control, int target) { return {GateKind::CNOT, target, control, 0.0}; }

  bool is_rotation() const { return kind != GateKind::CNOT; }
  bool is_parameterized() const {
    return is_rotation() && std::holds_alternative<ParamRef>(angle);
  }
  std::size_t param_index() const { return std::get<ParamRef>(angle).index; }

  bool operator==(const GateSpec&) const = default;
};

/// Throws std::invalid_argument if qubit indices are out of range or a CNOT
/// has control == target.
void validate_gate(const GateSpec& gate, int num_qubits);

// R_z(t) = diag(e^{-it/2}, e^{+it/2})
StateVector apply_rz(StateVector state, int qubit, double theta);
// R_y(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
StateVector apply_ry(StateVector state, int qubit, double theta);
StateVector apply_cnot(StateVector state, int control, int target);

/// In-place kernels over a batch of column states (rows = 2^q). They perform
/// no index validation; callers check gates once with validate_gate.
namespace kernels {

using Batch = Eigen::Ref<Eigen::MatrixXcd>;

void rz(Batch amps, int num_qubits, int qubit, double theta);
void ry(Batch amps, int num_qubits, int qubit, double theta);
void cnot(Batch amps, int num_qubits, int control, int target);

/// Applies gate(angle), or its inverse when `adjoint` is set.
void apply(Batch amps, int num_qubits, const GateSpec& gate, double angle, bool adjoint = false);

/// Multiplies by the rotation generator -iP/2 (P = Z or Y) on the gate's
/// target qubit, i.e. d/dt of exp(-itP/2) with the exponential factored out.
void generator(Batch amps, int num_qubits, const GateSpec& gate);

}  // namespace kernels

}  // namespace ipgq
