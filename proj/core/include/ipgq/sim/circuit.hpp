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
#include <vector>

#include <Eigen/Dense>

#include "ipgq/sim/gates.hpp"
#include "ipgq/sim/state.hpp"

namespace ipgq {

/// Rotation angles in radians, the optimization variable of an ansatz.
class ParameterVector {
 public:
  ParameterVector() = default;
  explicit ParameterVector(std::size_t size) : values_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size))) {}
  explicit ParameterVector(Eigen::VectorXd values) : values_(std::move(values)) {}

  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  double operator[](std::size_t i) const { return values_[static_cast<Eigen::Index>(i)]; }
  double& operator[](std::size_t i) { return values_[static_cast<Eigen::Index>(i)]; }

  const Eigen::VectorXd& values() const { return values_; }
  Eigen::VectorXd& values() { return values_; }

  bool operator==(const ParameterVector& other) const { return values_ == other.values_; }

 private:
  Eigen::VectorXd values_;
};

/// Resolved angle of a rotation gate. Throws ConfigError if the gate refers
/// past the end of `params`.
double resolve_angle(const GateSpec& gate, const ParameterVector& params);

/// Validates every gate against `num_qubits` and every parameter reference
/// against `params`.
void validate_circuit(std::span<const GateSpec> gates, const ParameterVector& params, int num_qubits);

/// Runs the gate sequence on `input`.
StateVector run_circuit(std::span<const GateSpec> gates, const ParameterVector& params,
                        const StateVector& input);

/// Matrix of the gate sequence; column j is the circuit applied to |j>.
UnitaryMatrix circuit_unitary(std::span<const GateSpec> gates, const ParameterVector& params,
                              int num_qubits);

namespace kernels {
/// Applies all gates in [first, last) to a batch; angles already validated.
void run_range(Batch amps, int num_qubits, std::span<const GateSpec> gates,
               const ParameterVector& params, std::size_t first, std::size_t last);
}  // namespace kernels

}  // namespace ipgq
