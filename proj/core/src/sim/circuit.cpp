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

#include "ipgq/sim/circuit.hpp"

#include <string>

#include "ipgq/errors.hpp"

namespace ipgq {

double resolve_angle(const GateSpec& gate, const ParameterVector& params) {
  if (const auto* fixed = std::get_if<double>(&gate.angle)) return *fixed;
  const std::size_t k = std::get<ParamRef>(gate.angle).index;
  if (k >= params.size()) {
    throw ConfigError("gate refers to parameter " + std::to_string(k) + " but only " +
                      std::to_string(params.size()) + " parameters were supplied");
  }
  return params[k];
}

void validate_circuit(std::span<const GateSpec> gates, const ParameterVector& params, int num_qubits) {
  for (const GateSpec& g : gates) {
    validate_gate(g, num_qubits);
    if (g.is_rotation()) (void)resolve_angle(g, params);
  }
}

namespace kernels {

void run_range(Batch amps, int num_qubits, std::span<const GateSpec> gates,
               const ParameterVector& params, std::size_t first, std::size_t last) {
  for (std::size_t p = first; p < last; ++p) {
    const GateSpec& g = gates[p];
    apply(amps, num_qubits, g, g.is_rotation() ? resolve_angle(g, params) : 0.0);
  }
}

}  // namespace kernels

StateVector run_circuit(std::span<const GateSpec> gates, const ParameterVector& params,
                        const StateVector& input) {
  validate_circuit(gates, params, input.num_qubits());
  StateVector out = input;
  kernels::run_range(out.amplitudes(), out.num_qubits(), gates, params, 0, gates.size());
  return out;
}

UnitaryMatrix circuit_unitary(std::span<const GateSpec> gates, const ParameterVector& params,
                              int num_qubits) {
  validate_circuit(gates, params, num_qubits);
  UnitaryMatrix u(num_qubits);
  kernels::run_range(u.matrix(), num_qubits, gates, params, 0, gates.size());
  return u;
}

}  // namespace ipgq
