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

#include "ipgq/optim/lbfgs.hpp"

#include "ipgq/errors.hpp"

namespace ipgq::optim {

void validate(const LbfgsSettings& s) {
  if (s.memory < 1) throw ConfigError("L-BFGS memory must be >= 1");
  if (!(s.armijo_c > 0 && s.armijo_c < 1)) throw ConfigError("Armijo constant must lie in (0, 1)");
  if (!(s.shrink > 0 && s.shrink < 1)) throw ConfigError("backtracking factor must lie in (0, 1)");
  if (s.max_backtracks < 0) throw ConfigError("max_backtracks must be >= 0");
}

bool LbfgsHistory::push(Eigen::VectorXd s, Eigen::VectorXd y) {
  const double sy = s.dot(y);
  if (!(sy > 0)) return false;
  if (static_cast<int>(s_.size()) == memory_) {
    s_.pop_front();
    y_.pop_front();
    rho_.pop_front();
  }
  s_.push_back(std::move(s));
  y_.push_back(std::move(y));
  rho_.push_back(1.0 / sy);
  return true;
}

void LbfgsHistory::clear() {
  s_.clear();
  y_.clear();
  rho_.clear();
}

Eigen::VectorXd LbfgsHistory::direction(const Eigen::VectorXd& gradient) const {
  const std::size_t m = s_.size();
  Eigen::VectorXd r = gradient;
  std::vector<double> a(m);
  for (std::size_t i = m; i-- > 0;) {
    a[i] = rho_[i] * s_[i].dot(r);
    r -= a[i] * y_[i];
  }
  if (m > 0) r *= s_.back().dot(y_.back()) / y_.back().squaredNorm();
  for (std::size_t i = 0; i < m; ++i) {
    const double b = rho_[i] * y_[i].dot(r);
    r += (a[i] - b) * s_[i];
  }
  return -r;
}

LbfgsStepResult lbfgs_step(const Objective& objective, LbfgsHistory& history,
                           const Eigen::VectorXd& x, double value, const Eigen::VectorXd& gradient,
                           const LbfgsSettings& settings) {
  LbfgsStepResult out{x, value, gradient, false, 0};
  if (gradient.squaredNorm() == 0) return out;

  Eigen::VectorXd d = history.direction(gradient);
  double slope = gradient.dot(d);
  if (!(slope < 0)) {
    history.clear();
    d = -gradient;
    slope = -gradient.squaredNorm();
  }

  double t = 1.0;
  for (int k = 0; k <= settings.max_backtracks; ++k, t *= settings.shrink) {
    const Eigen::VectorXd trial = x + t * d;
    const double f = objective.value(trial);
    ++out.evaluations;
    if (std::isfinite(f) && f <= value + settings.armijo_c * t * slope) {
      Evaluation e = objective.evaluate(trial, Order::Gradient);
      ++out.evaluations;
      history.push(trial - x, e.gradient - gradient);
      out.x = trial;
      out.value = e.value;
      out.gradient = std::move(e.gradient);
      return out;
    }
  }
  out.stagnated = true;
  return out;
}

}  // namespace ipgq::optim
