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

#include <Eigen/Dense>

namespace ipgq::optim {

enum class Order { Value = 0, Gradient = 1, Hessian = 2 };

struct Evaluation {
  double value = 0;
  Eigen::VectorXd gradient;  // empty below Order::Gradient
  Eigen::MatrixXd hessian;   // empty below Order::Hessian
};

/// Smooth objective f : R^d -> R with derivatives on request.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual Eigen::Index dimension() const = 0;
  virtual Evaluation evaluate(const Eigen::VectorXd& x, Order order) const = 0;

  double value(const Eigen::VectorXd& x) const { return evaluate(x, Order::Value).value; }
};

/// f(x) = 1/2 x^T A x - b^T x with constant symmetric A.
class QuadraticObjective final : public Objective {
 public:
  QuadraticObjective(Eigen::MatrixXd a, Eigen::VectorXd b);
  explicit QuadraticObjective(Eigen::MatrixXd a);

  Eigen::Index dimension() const override { return a_.rows(); }
  Evaluation evaluate(const Eigen::VectorXd& x, Order order) const override;

  const Eigen::MatrixXd& hessian() const { return a_; }

 private:
  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
};

}  // namespace ipgq::optim
