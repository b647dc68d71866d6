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

#include "ipgq/optim/ipg.hpp"

#include <algorithm>
#include <cmath>

#include "ipgq/errors.hpp"

namespace ipgq::optim {

void validate(const IpgSchedule& s) {
  if (!(s.delta > 0 && s.delta <= 1)) throw ConfigError("IPG delta must lie in (0, 1]");
  if (!(s.beta_margin > 0)) throw ConfigError("IPG beta margin must be > 0");
  if (!(s.alpha_safety > 0 && s.alpha_safety < 1)) throw ConfigError("IPG alpha safety factor must lie in (0, 1)");
}

std::string_view to_string(PreconditionerInit init) {
  switch (init) {
    case PreconditionerInit::InverseScale: return "inverse-scale";
    case PreconditionerInit::Identity: return "identity";
    case PreconditionerInit::Zero: return "zero";
  }
  return "?";
}

namespace {

std::pair<double, double> exact_extremes(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("Hessian eigensolve failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  return {ev[0], ev[ev.size() - 1]};
}

std::pair<double, double> gershgorin_extremes(const Eigen::MatrixXd& h) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    const double radius = h.row(i).cwiseAbs().sum() - std::abs(h(i, i));
    lo = std::min(lo, h(i, i) - radius);
    hi = std::max(hi, h(i, i) + radius);
  }
  return {lo, hi};
}

}  // namespace

ScheduleValues ipg_schedule(const Eigen::MatrixXd& hessian, const IpgSchedule& schedule) {
  if (hessian.rows() != hessian.cols() || hessian.rows() == 0) {
    throw std::invalid_argument("ipg_schedule: Hessian must be square and non-empty");
  }
  if (!hessian.allFinite()) throw NumericalError("Hessian has non-finite entries");
  const auto [lo, hi] = schedule.bounds == EigenBounds::Exact ? exact_extremes(hessian)
                                                              : gershgorin_extremes(hessian);
  ScheduleValues v;
  v.lambda_min = lo;
  v.lambda_max = hi;
  v.beta = std::max(0.0, -lo) + schedule.beta_margin;
  v.alpha = schedule.alpha_safety / (hi + v.beta);
  v.delta = schedule.delta;
  return v;
}

bool satisfies_constraints(const ScheduleValues& v, const Eigen::MatrixXd& hessian) {
  const auto [lo, hi] = exact_extremes(hessian);
  return v.delta > 0 && v.delta <= 1 && v.beta >= 0 && v.beta > -lo && v.alpha > 0 &&
         v.alpha < 1.0 / (hi + v.beta);
}

Eigen::MatrixXd initial_preconditioner(PreconditionerInit init, Eigen::Index dim,
                                       const ScheduleValues& first) {
  switch (init) {
    case PreconditionerInit::InverseScale:
      return Eigen::MatrixXd::Identity(dim, dim) / (first.lambda_max + first.beta);
    case PreconditionerInit::Identity:
      return Eigen::MatrixXd::Identity(dim, dim);
    case PreconditionerInit::Zero:
      return Eigen::MatrixXd::Zero(dim, dim);
  }
  return Eigen::MatrixXd::Identity(dim, dim);
}

IpgState ipg_step(const IpgState& state, const Eigen::VectorXd& gradient,
                  const Eigen::MatrixXd& hessian, const ScheduleValues& s) {
  const Eigen::Index d = state.x.size();
  if (gradient.size() != d || state.K.rows() != d || state.K.cols() != d || hessian.rows() != d ||
      hessian.cols() != d) {
    throw std::invalid_argument("ipg_step: dimension mismatch");
  }
  IpgState next;
  next.iteration = state.iteration + 1;
  next.x = state.x - s.delta * (state.K * gradient);

  // K - alpha ((H + beta I) K - I), without forming H + beta I
  Eigen::MatrixXd residual = hessian * state.K + s.beta * state.K;
  residual.diagonal().array() -= 1.0;
  next.K = state.K - s.alpha * residual;

  if (!next.x.allFinite()) throw NumericalError("IPG estimate became non-finite");
  if (!next.K.allFinite()) throw NumericalError("IPG pre-conditioner became non-finite");
  return next;
}

}  // namespace ipgq::optim
