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

struct GdSettings {
  double learning_rate = 0.09;
};

/// x - eta * g. Throws ConfigError unless eta > 0.
Eigen::VectorXd gd_step(const Eigen::VectorXd& x, const Eigen::VectorXd& gradient, double eta);

struct AdamSettings {
  double learning_rate = 0.09;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  Eigen::VectorXd x;
  Eigen::VectorXd m;  // first moment
  Eigen::VectorXd v;  // second moment
  int t = 0;
};

AdamState adam_init(Eigen::VectorXd x);

/// Bias-corrected Adam update.
AdamState adam_step(AdamState state, const Eigen::VectorXd& gradient, const AdamSettings& settings);

void validate(const GdSettings& s);
void validate(const AdamSettings& s);

}  // namespace ipgq::optim
