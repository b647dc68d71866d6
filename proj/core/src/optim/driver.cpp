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

#include "ipgq/optim/driver.hpp"

#include <cassert>
#include <chrono>
#include <cmath>

#include "ipgq/errors.hpp"

namespace ipgq::optim {

std::string_view algorithm_tag(const AlgorithmSettings& settings) {
  struct {
    std::string_view operator()(const GdSettings&) const { return "gd"; }
    std::string_view operator()(const AdamSettings&) const { return "adam"; }
    std::string_view operator()(const LbfgsSettings&) const { return "lbfgs"; }
    std::string_view operator()(const IpgSettings&) const { return "ipg"; }
  } tag;
  return std::visit(tag, settings);
}

void validate(const OptimizerConfig& config) {
  if (config.max_iterations < 0) throw ConfigError("max_iterations must be >= 0");
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IpgSettings>) {
          validate(s.schedule);
        } else {
          validate(s);
        }
      },
      config.algorithm);
}

namespace {

class Runner {
 public:
  Runner(const Objective& objective, const OptimizerConfig& config, RunRecord& record)
      : f_(objective), config_(config), rec_(record) {}

  // Evaluates at x and appends the cost to the history before checking the
  // derivatives, so an abort keeps the last finite point.
  Evaluation eval(const Eigen::VectorXd& x, Order order) {
    Evaluation e = f_.evaluate(x, order);
    if (!std::isfinite(e.value)) throw NumericalError("cost became non-finite");
    record(e.value, x);
    if (order >= Order::Gradient && !e.gradient.allFinite()) throw NumericalError("gradient became non-finite");
    if (order >= Order::Hessian && !e.hessian.allFinite()) throw NumericalError("Hessian became non-finite");
    return e;
  }

  void record(double value, const Eigen::VectorXd& x) {
    rec_.cost_history.push_back(value);
    rec_.final_params.assign(x.data(), x.data() + x.size());
  }

  bool done(int t) const {
    if (t >= config_.max_iterations) return true;
    return config_.tolerance && rec_.cost_history.back() < *config_.tolerance;
  }

  void run(const GdSettings& s, Eigen::VectorXd x) {
    Evaluation e = eval(x, Order::Gradient);
    for (int t = 0; !done(t); ++t) {
      x = gd_step(x, e.gradient, s.learning_rate);
      e = eval(x, Order::Gradient);
    }
  }

  void run(const AdamSettings& s, Eigen::VectorXd x) {
    Evaluation e = eval(x, Order::Gradient);
    AdamState state = adam_init(std::move(x));
    for (int t = 0; !done(t); ++t) {
      state = adam_step(std::move(state), e.gradient, s);
      e = eval(state.x, Order::Gradient);
    }
  }

  void run(const LbfgsSettings& s, Eigen::VectorXd x) {
    Evaluation e = eval(x, Order::Gradient);
    LbfgsHistory history(s.memory);
    for (int t = 0; !done(t); ++t) {
      LbfgsStepResult step = lbfgs_step(f_, history, x, e.value, e.gradient, s);
      if (step.stagnated) {
        rec_.stagnated = true;
        rec_.message = "line search failed at iteration " + std::to_string(t);
        return;
      }
      if (!step.gradient.allFinite()) throw NumericalError("gradient became non-finite");
      x = std::move(step.x);
      e.value = step.value;
      e.gradient = std::move(step.gradient);
      record(e.value, x);
    }
  }

  void run(const IpgSettings& s, Eigen::VectorXd x) {
    const Eigen::Index d = x.size();
    Evaluation e = eval(x, config_.max_iterations > 0 ? Order::Hessian : Order::Value);
    IpgState state{std::move(x), Eigen::MatrixXd(), 0};
    for (int t = 0; !done(t); ++t) {
      const ScheduleValues sched = ipg_schedule(e.hessian, s.schedule);
      assert(satisfies_constraints(sched, e.hessian));
      if (t == 0) state.K = initial_preconditioner(s.init, d, sched);
      state = ipg_step(state, e.gradient, e.hessian, sched);
      e = eval(state.x, t + 1 < config_.max_iterations ? Order::Hessian : Order::Value);
    }
  }

 private:
  const Objective& f_;
  const OptimizerConfig& config_;
  RunRecord& rec_;
};

}  // namespace

RunRecord optimize(const Objective& objective, const OptimizerConfig& config,
                   const Eigen::VectorXd& init) {
  validate(config);
  if (init.size() != objective.dimension()) {
    throw std::invalid_argument("initial point has the wrong dimension");
  }
  RunRecord rec;
  rec.algorithm = std::string(algorithm_tag(config.algorithm));
  rec.final_params.assign(init.data(), init.data() + init.size());
  const auto start = std::chrono::steady_clock::now();
  Runner runner(objective, config, rec);
  try {
    std::visit([&](const auto& s) { runner.run(s, init); }, config.algorithm);
  } catch (const NumericalError& err) {
    if (rec.cost_history.empty()) throw;  // not even the initial cost is finite
    rec.aborted = true;
    rec.message = err.what();
  }
  rec.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

MultiRunResult multi_run(const Objective& objective, const OptimizerConfig& config, int n_runs,
                         std::uint64_t base_seed, const InitSampler& init) {
  if (n_runs < 1) throw ConfigError("n_runs must be >= 1");
  MultiRunResult out;
  out.runs.reserve(static_cast<std::size_t>(n_runs));
  for (int r = 0; r < n_runs; ++r) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(r);
    RunRecord rec = optimize(objective, config, init(seed));
    rec.seed = seed;
    out.runs.push_back(std::move(rec));
  }

  std::size_t best = 0;
  std::size_t longest = 0;
  for (std::size_t r = 0; r < out.runs.size(); ++r) {
    if (out.runs[r].final_cost() < out.runs[best].final_cost()) best = r;
    longest = std::max(longest, out.runs[r].cost_history.size());
  }
  out.best = out.runs[best];

  out.average_history.assign(longest, 0.0);
  for (const RunRecord& rec : out.runs) {
    for (std::size_t t = 0; t < longest; ++t) {
      out.average_history[t] += rec.cost_history[std::min(t, rec.cost_history.size() - 1)];
    }
  }
  for (double& v : out.average_history) v /= static_cast<double>(out.runs.size());
  return out;
}

}  // namespace ipgq::optim
