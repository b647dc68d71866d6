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

#include <deque>

#include <Eigen/Dense>

#include "ipgq/optim/objective.hpp"

namespace ipgq::optim {

struct LbfgsSettings {
  int memory = 10;
  double armijo_c = 1e-4;  // sufficient-decrease constant
  double shrink = 0.5;     // backtracking factor
  int max_backtracks = 30;
};

void validate(const LbfgsSettings& s);

/// Curvature pairs (s, y) for the two-loop recursion, newest last.
class LbfgsHistory {
 public:
  explicit LbfgsHistory(int memory) : memory_(memory) {}

  /// Stores the pair unless s^T y <= 0. Returns whether it was kept.
  bool push(Eigen::VectorXd s, Eigen::VectorXd y);

  /// -H_k g via the two-loop recursion. With no pairs stored the initial
  /// inverse Hessian is I, i.e. steepest descent; otherwise it is scaled by
  /// s^T y / y^T y of the newest pair.
  Eigen::VectorXd direction(const Eigen::VectorXd& gradient) const;

  std::size_t size() const { return s_.size(); }
  void clear();

 private:
  int memory_;
  std::deque<Eigen::VectorXd> s_;
  std::deque<Eigen::VectorXd> y_;
  std::deque<double> rho_;
};

struct LbfgsStepResult {
  Eigen::VectorXd x;
  double value = 0;
  Eigen::VectorXd gradient;
  bool stagnated = false;  // line search exhausted; x unchanged
  int evaluations = 0;
};

/// One L-BFGS iteration from (x, f, g): two-loop direction, Armijo
/// backtracking from unit step, then a history update at the accepted point.
/// A non-descent direction resets the history and falls back to -g.
LbfgsStepResult lbfgs_step(const Objective& objective, LbfgsHistory& history,
                           const Eigen::VectorXd& x, double value, const Eigen::VectorXd& gradient,
                           const LbfgsSettings& settings);

}  // namespace ipgq::optim
