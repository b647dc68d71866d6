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

#include <functional>

#include <Eigen/Dense>

namespace ipgq {

// Central-difference derivatives. These exist to check the analytic
// derivatives; nothing on the optimization path calls them.

using ScalarFunction = std::function<double(const Eigen::VectorXd&)>;

inline constexpr double kFdGradientStep = 1e-5;
inline constexpr double kFdHessianStep = 1e-4;

/// (f(x + h e_k) - f(x - h e_k)) / 2h per coordinate. Requires h > 0.
Eigen::VectorXd fd_gradient(const ScalarFunction& f, const Eigen::VectorXd& x,
                            double h = kFdGradientStep);

/// Second central differences, symmetric by construction.
Eigen::MatrixXd fd_hessian(const ScalarFunction& f, const Eigen::VectorXd& x,
                           double h = kFdHessianStep);

}  // namespace ipgq
