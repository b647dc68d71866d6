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

#include "ipgq/cost/cost.hpp"

#include <stdexcept>
#include <string>

#include "ipgq/autodiff/overlap.hpp"
#include "ipgq/errors.hpp"

namespace ipgq {

std::string_view to_string(CostKind kind) {
  switch (kind) {
    case CostKind::StateInfidelity: return "state_infidelity";
    case CostKind::MatrixDistance: return "matrix_distance";
    case CostKind::FrobeniusInfidelity: return "frobenius_infidelity";
  }
  return "?";
}

CostFunction::CostFunction(CostKind kind, const CircuitTemplate& tmpl,
                           std::variant<StateTarget, UnitaryMatrix> target)
    : kind_(kind), tmpl_(tmpl), gates_(gate_list(tmpl)), target_(std::move(target)) {}

CostFunction CostFunction::state_infidelity(const CircuitTemplate& tmpl, StateVector target, StateVector input) {
  if (target.num_qubits() != tmpl.num_qubits() || input.num_qubits() != tmpl.num_qubits()) {
    throw std::invalid_argument("target/input qubit count does not match the ansatz");
  }
  return CostFunction(CostKind::StateInfidelity, tmpl, StateTarget{std::move(target), std::move(input)});
}

CostFunction CostFunction::matrix_distance(const CircuitTemplate& tmpl, UnitaryMatrix target) {
  if (target.num_qubits() != tmpl.num_qubits()) {
    throw std::invalid_argument("target unitary size does not match the ansatz");
  }
  return CostFunction(CostKind::MatrixDistance, tmpl, std::move(target));
}

CostFunction CostFunction::frobenius_infidelity(const CircuitTemplate& tmpl, UnitaryMatrix target) {
  if (target.num_qubits() != tmpl.num_qubits()) {
    throw std::invalid_argument("target unitary size does not match the ansatz");
  }
  return CostFunction(CostKind::FrobeniusInfidelity, tmpl, std::move(target));
}

const StateVector& CostFunction::target_state() const {
  if (const auto* s = std::get_if<StateTarget>(&target_)) return s->target;
  throw UsageError(std::string(to_string(kind_)) + " has no target state");
}

const StateVector& CostFunction::input_state() const {
  if (const auto* s = std::get_if<StateTarget>(&target_)) return s->input;
  throw UsageError(std::string(to_string(kind_)) + " has no input state");
}

const UnitaryMatrix& CostFunction::target_unitary() const {
  if (const auto* u = std::get_if<UnitaryMatrix>(&target_)) return *u;
  throw UsageError(std::string(to_string(kind_)) + " has no target unitary");
}

optim::Evaluation CostFunction::evaluate_params(const ParameterVector& params, optim::Order order) const {
  if (params.size() != tmpl_.param_count()) {
    throw std::invalid_argument("expected " + std::to_string(tmpl_.param_count()) + " parameters, got " +
                                std::to_string(params.size()));
  }
  const int q = tmpl_.num_qubits();
  const auto d = static_cast<Eigen::Index>(dimension_for(q));
  const auto dorder = static_cast<DerivativeOrder>(order);

  OverlapJet z;
  if (kind_ == CostKind::StateInfidelity) {
    const auto& t = std::get<StateTarget>(target_);
    z = overlap_jet(gates_, params, t.target.amplitudes(), t.input.amplitudes(), q, 1.0, dorder);
  } else {
    const auto& a = std::get<UnitaryMatrix>(target_).matrix();
    z = overlap_jet(gates_, params, a, Eigen::MatrixXcd::Identity(d, d), q, 1.0 / static_cast<double>(d), dorder);
  }

  optim::Evaluation e;
  switch (kind_) {
    case CostKind::StateInfidelity:
      e.value = 1.0 - z.value.real();
      if (order >= optim::Order::Gradient) e.gradient = -z.gradient.real();
      if (order >= optim::Order::Hessian) e.hessian = -z.hessian.real();
      break;
    case CostKind::MatrixDistance: {
      const UnitaryMatrix b = circuit_unitary(gates_, params, q);
      e.value = (std::get<UnitaryMatrix>(target_).matrix() - b.matrix()).squaredNorm() / static_cast<double>(d);
      if (order >= optim::Order::Gradient) e.gradient = -2.0 * z.gradient.real();
      if (order >= optim::Order::Hessian) e.hessian = -2.0 * z.hessian.real();
      break;
    }
    case CostKind::FrobeniusInfidelity: {
      e.value = 1.0 - std::norm(z.value);
      const Complex zbar = std::conj(z.value);
      if (order >= optim::Order::Gradient) e.gradient = -2.0 * (zbar * z.gradient).real();
      if (order >= optim::Order::Hessian) {
        // d2|z|^2 = 2 Re(conj(dz_j) dz_k + conj(z) d2z_jk)
        const Eigen::MatrixXcd outer = z.gradient.conjugate() * z.gradient.transpose();
        e.hessian = -2.0 * (outer + zbar * z.hessian).real();
      }
      break;
    }
  }
  return e;
}

double CostFunction::value(const ParameterVector& params) const {
  return evaluate_params(params, optim::Order::Value).value;
}

Eigen::VectorXd CostFunction::gradient(const ParameterVector& params) const {
  return evaluate_params(params, optim::Order::Gradient).gradient;
}

Eigen::MatrixXd CostFunction::hessian(const ParameterVector& params) const {
  return evaluate_params(params, optim::Order::Hessian).hessian;
}

optim::Evaluation CostFunction::evaluate(const Eigen::VectorXd& x, optim::Order order) const {
  return evaluate_params(ParameterVector(x), order);
}

namespace {

const CostFunction& expect(const CostFunction& cf, CostKind kind) {
  if (cf.kind() != kind) {
    throw UsageError("cost function is " + std::string(to_string(cf.kind())) + ", not " +
                     std::string(to_string(kind)));
  }
  return cf;
}

}  // namespace

double state_infidelity(const ParameterVector& params, const CostFunction& cf) {
  return expect(cf, CostKind::StateInfidelity).value(params);
}

double matrix_distance(const ParameterVector& params, const CostFunction& cf) {
  return expect(cf, CostKind::MatrixDistance).value(params);
}

double frobenius_infidelity(const ParameterVector& params, const CostFunction& cf) {
  return expect(cf, CostKind::FrobeniusInfidelity).value(params);
}

Eigen::VectorXd cost_gradient(const ParameterVector& params, const CostFunction& cf) {
  return cf.gradient(params);
}

Eigen::MatrixXd cost_hessian(const ParameterVector& params, const CostFunction& cf) {
  return cf.hessian(params);
}

}  // namespace ipgq
