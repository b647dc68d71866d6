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
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "ipgq/ansatz/ansatz.hpp"
#include "ipgq/optim/objective.hpp"
#include "ipgq/sim/circuit.hpp"

namespace ipgq {

enum class CostKind {
  StateInfidelity,      // 1 - Re<target|psi>
  MatrixDistance,       // sum |A - B|^2 / 2^q
  FrobeniusInfidelity,  // 1 - |tr(A^dagger B) / 2^q|^2
};

std::string_view to_string(CostKind kind);

/// A cost over the parameters of a fixed ansatz, with its target embedded.
///
/// StateInfidelity keeps the phase of the overlap (real part, not modulus), so
/// the circuit must match the target's global phase as well. MatrixDistance
/// is likewise phase sensitive; FrobeniusInfidelity is not.
///
/// Derivatives go through the complex overlap z = <target|U(theta) input>
/// (scaled by 2^-q for unitaries):
///   StateInfidelity      f = 1 - Re z
///   MatrixDistance       f = 2 - 2 Re z   (A, B unitary)
///   FrobeniusInfidelity  f = 1 - |z|^2
class CostFunction final : public optim::Objective {
 public:
  static CostFunction state_infidelity(const CircuitTemplate& tmpl, StateVector target, StateVector input);
  static CostFunction matrix_distance(const CircuitTemplate& tmpl, UnitaryMatrix target);
  static CostFunction frobenius_infidelity(const CircuitTemplate& tmpl, UnitaryMatrix target);

  CostKind kind() const { return kind_; }
  const CircuitTemplate& circuit_template() const { return tmpl_; }
  std::span<const GateSpec> gates() const { return gates_; }

  // Throw UsageError when the kind has no such member.
  const StateVector& target_state() const;
  const StateVector& input_state() const;
  const UnitaryMatrix& target_unitary() const;

  double value(const ParameterVector& params) const;
  Eigen::VectorXd gradient(const ParameterVector& params) const;
  Eigen::MatrixXd hessian(const ParameterVector& params) const;

  using optim::Objective::value;
  Eigen::Index dimension() const override { return static_cast<Eigen::Index>(tmpl_.param_count()); }
  optim::Evaluation evaluate(const Eigen::VectorXd& x, optim::Order order) const override;

 private:
  struct StateTarget {
    StateVector target;
    StateVector input;
  };

  CostFunction(CostKind kind, const CircuitTemplate& tmpl, std::variant<StateTarget, UnitaryMatrix> target);

  optim::Evaluation evaluate_params(const ParameterVector& params, optim::Order order) const;

  CostKind kind_;
  CircuitTemplate tmpl_;
  std::vector<GateSpec> gates_;
  std::variant<StateTarget, UnitaryMatrix> target_;
};

// Kind-checked entry points; each throws UsageError on a kind mismatch.
double state_infidelity(const ParameterVector& params, const CostFunction& cf);
double matrix_distance(const ParameterVector& params, const CostFunction& cf);
double frobenius_infidelity(const ParameterVector& params, const CostFunction& cf);

Eigen::VectorXd cost_gradient(const ParameterVector& params, const CostFunction& cf);
Eigen::MatrixXd cost_hessian(const ParameterVector& params, const CostFunction& cf);

}  // namespace ipgq
