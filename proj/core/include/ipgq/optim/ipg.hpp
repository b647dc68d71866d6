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

#include <string_view>

#include <Eigen/Dense>

namespace ipgq::optim {

/// How the extreme Hessian eigenvalues feeding the schedule are obtained.
enum class EigenBounds {
  Exact,       // symmetric eigensolve
  Gershgorin,  // disc bounds; cheaper for large d, more conservative
};

/// Policy producing (alpha_t, beta_t, delta_t) from the current Hessian:
///
///   beta  = max(0, -lambda_min) + beta_margin
///   alpha = alpha_safety / (lambda_max + beta)
///   delta = delta
///
/// which gives delta <= 1, beta > -lambda_min and alpha < 1/(lambda_max + beta)
/// for any beta_margin > 0 and alpha_safety in (0, 1).
struct IpgSchedule {
  double delta = 1.0;
  double beta_margin = 1e-3;
  double alpha_safety = 0.9;
  EigenBounds bounds = EigenBounds::Exact;
};

void validate(const IpgSchedule& s);

struct ScheduleValues {
  double alpha = 0;
  double beta = 0;
  double delta = 1;
  double lambda_min = 0;  // or its lower bound
  double lambda_max = 0;  // or its upper bound
};

/// Throws NumericalError if H has a non-finite entry.
ScheduleValues ipg_schedule(const Eigen::MatrixXd& hessian, const IpgSchedule& schedule);

/// True when the three step-size constraints hold strictly against the exact
/// spectrum of `hessian`.
bool satisfies_constraints(const ScheduleValues& values, const Eigen::MatrixXd& hessian);

enum class PreconditionerInit {
  InverseScale,  // K_0 = I / (lambda_max(H_0) + beta_0)
  Identity,
  Zero,
};

std::string_view to_string(PreconditionerInit init);

struct IpgState {
  Eigen::VectorXd x;  // estimate x_t
  Eigen::MatrixXd K;  // pre-conditioner K_t; neither symmetric nor definite in general
  int iteration = 0;
};

/// K_0 for the given policy; `first` is the schedule at x_0.
Eigen::MatrixXd initial_preconditioner(PreconditionerInit init, Eigen::Index dim,
                                       const ScheduleValues& first);

/// One IPG iteration at x_t with g_t = grad f(x_t), H_t = hess f(x_t):
///
///   x_{t+1} = x_t - delta_t K_t g_t
///   K_{t+1} = K_t - alpha_t ((H_t + beta_t I) K_t - I)
///
/// The estimate moves with the current K_t before K is updated. Throws
/// NumericalError if either update produces a non-finite entry.
IpgState ipg_step(const IpgState& state, const Eigen::VectorXd& gradient,
                  const Eigen::MatrixXd& hessian, const ScheduleValues& schedule);

}  // namespace ipgq::optim
