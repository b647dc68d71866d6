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

#include <cmath>

#include "ipgq/errors.hpp"
#include "ipgq/optim/first_order.hpp"
#include "ipgq/optim/objective.hpp"

namespace ipgq::optim {

QuadraticObjective::QuadraticObjective(Eigen::MatrixXd a, Eigen::VectorXd b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != a_.cols() || b_.size() != a_.rows()) {
    throw std::invalid_argument("quadratic objective: A must be square and match b");
  }
}

QuadraticObjective::QuadraticObjective(Eigen::MatrixXd a)
    : QuadraticObjective(a, Eigen::VectorXd::Zero(a.rows())) {}

Evaluation QuadraticObjective::evaluate(const Eigen::VectorXd& x, Order order) const {
  const Eigen::VectorXd ax = a_ * x;
  Evaluation e;
  e.value = 0.5 * x.dot(ax) - b_.dot(x);
  if (order >= Order::Gradient) e.gradient = ax - b_;
  if (order >= Order::Hessian) e.hessian = a_;
  return e;
}

void validate(const GdSettings& s) {
  if (!(s.learning_rate > 0)) throw ConfigError("gradient descent learning rate must be > 0");
}

void validate(const AdamSettings& s) {
  if (!(s.learning_rate > 0)) throw ConfigError("Adam learning rate must be > 0");
  if (!(s.beta1 >= 0 && s.beta1 < 1) || !(s.beta2 >= 0 && s.beta2 < 1)) {
    throw ConfigError("Adam betas must lie in [0, 1)");
  }
  if (!(s.epsilon > 0)) throw ConfigError("Adam epsilon must be > 0");
}

Eigen::VectorXd gd_step(const Eigen::VectorXd& x, const Eigen::VectorXd& gradient, double eta) {
  validate(GdSettings{eta});
  return x - eta * gradient;
}

AdamState adam_init(Eigen::VectorXd x) {
  const Eigen::Index n = x.size();
  return AdamState{std::move(x), Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n), 0};
}

AdamState adam_step(AdamState state, const Eigen::VectorXd& gradient, const AdamSettings& s) {
  state.t += 1;
  state.m = s.beta1 * state.m + (1 - s.beta1) * gradient;
  state.v = s.beta2 * state.v + (1 - s.beta2) * gradient.cwiseAbs2();
  const double c1 = 1 - std::pow(s.beta1, state.t);
  const double c2 = 1 - std::pow(s.beta2, state.t);
  const Eigen::ArrayXd m_hat = state.m.array() / c1;
  const Eigen::ArrayXd v_hat = state.v.array() / c2;
  state.x -= (s.learning_rate * m_hat / (v_hat.sqrt() + s.epsilon)).matrix();
  return state;
}

}  // namespace ipgq::optim
