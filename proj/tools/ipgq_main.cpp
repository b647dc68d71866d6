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

// ipgq: command-line driver for the circuit optimization experiments.
//
//   ipgq prepare-state   --target ghz|w [overrides]
//   ipgq compile-unitary --cost frobenius|matrix-distance [overrides]
//   ipgq bench           [--config file.json | --experiment kind] [overrides]
//   ipgq export-qasm     --record out/record.json --optimizer ipg --out circuit.qasm
//
// Exit status: 0 success, 1 configuration or I/O error, 2 numerical abort.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipgq/bench/config.hpp"
#include "ipgq/bench/experiment.hpp"
#include "ipgq/bench/export.hpp"
#include "ipgq/bench/qasm.hpp"
#include "ipgq/bench/svg.hpp"
#include "ipgq/errors.hpp"

namespace fs = std::filesystem;
using namespace ipgq;
using namespace ipgq::bench;

namespace {

constexpr const char* kOutDirEnv = "IPGQ_OUT_DIR";
constexpr const char* kDefaultOutDir = "ipgq-out";

struct Overrides {
  std::string config_path;
  std::string experiment;
  std::vector<std::string> optimizers;
  std::optional<std::uint64_t> seed;
  std::optional<int> iterations;
  std::optional<int> runs;
  std::optional<int> qubits;
  std::optional<int> layers;
  std::optional<bool> shared_init;
  std::string entangler;
  bool grow_layers = false;
  std::optional<double> grow_threshold;
  std::optional<std::size_t> histogram_samples;
  std::string out;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "JSON experiment config")->check(CLI::ExistingFile);
  cmd->add_option("--optimizer", o.optimizers, "Optimizers to run (gd, adam, lbfgs, ipg); repeatable");
  cmd->add_option("--seed", o.seed, "Base seed; run r uses seed + r");
  cmd->add_option("--iters", o.iterations, "Iterations per run");
  cmd->add_option("--runs", o.runs, "Random initializations per optimizer");
  cmd->add_option("--qubits", o.qubits, "Number of qubits");
  cmd->add_option("--layers", o.layers, "Ansatz layers");
  cmd->add_option("--shared-init", o.shared_init, "Same initial draws for every optimizer (true/false)");
  cmd->add_option("--entangler", o.entangler, "chain-every-layer, chain-between-layers or ring-strided");
  cmd->add_flag("--grow-layers", o.grow_layers, "Retry with layers + 2 while the best cost is above threshold");
  cmd->add_option("--grow-threshold", o.grow_threshold, "Cost threshold for --grow-layers");
  cmd->add_option("--histogram-samples", o.histogram_samples, "Random inputs for the QFT fidelity histogram");
  cmd->add_option("--out", o.out, std::string("Output directory (default $") + kOutDirEnv + " or " +
                                      kDefaultOutDir + ")");
}

optim::AlgorithmSettings settings_for(const std::string& name, const ExperimentConfig& base) {
  for (const auto& s : base.optimizers) {
    if (optim::algorithm_tag(s) == name) return s;
  }
  if (name == "gd") return optim::GdSettings{};
  if (name == "adam") return optim::AdamSettings{};
  if (name == "lbfgs") return optim::LbfgsSettings{};
  if (name == "ipg") return optim::IpgSettings{};
  throw ConfigError("unknown optimizer '" + name + "'");
}

ExperimentConfig build_config(ExperimentKind fallback, const Overrides& o) {
  ExperimentConfig c;
  if (!o.config_path.empty()) {
    c = load_config(o.config_path);
    if (!o.experiment.empty() && experiment_from_string(o.experiment) != c.kind) {
      throw ConfigError("--experiment disagrees with the experiment in " + o.config_path);
    }
  } else {
    c = default_config(o.experiment.empty() ? fallback : experiment_from_string(o.experiment));
  }
  if (!o.optimizers.empty()) {
    std::vector<optim::AlgorithmSettings> chosen;
    for (const auto& name : o.optimizers) chosen.push_back(settings_for(name, c));
    c.optimizers = std::move(chosen);
  }
  if (o.seed) c.base_seed = *o.seed;
  if (o.iterations) c.iterations = *o.iterations;
  if (o.runs) c.n_runs = *o.runs;
  if (o.qubits) c.num_qubits = *o.qubits;
  if (o.layers) c.num_layers = *o.layers;
  if (o.shared_init) c.shared_init = *o.shared_init;
  if (!o.entangler.empty()) c.entangler = entangler_from_string(o.entangler);
  if (o.grow_layers) c.grow_layers = true;
  if (o.grow_threshold) c.grow_threshold = *o.grow_threshold;
  if (o.histogram_samples) c.histogram_samples = *o.histogram_samples;
  if (c.grow_layers && c.max_layers < c.num_layers) c.max_layers = c.num_layers;
  if (!o.out.empty()) {
    c.output_dir = o.out;
  } else if (c.output_dir.empty()) {
    const char* env = std::getenv(kOutDirEnv);
    c.output_dir = env && *env ? env : kDefaultOutDir;
  }
  validate(c);
  return c;
}

void print_summary(const AggregateRecord& record) {
  std::printf("%s  q=%d layers=%d entangler=%s iterations=%d runs=%d\n",
              std::string(to_string(record.config.kind)).c_str(), record.config.num_qubits,
              record.layers_used, std::string(to_string(record.config.entangler)).c_str(),
              record.config.iterations, record.config.n_runs);
  std::printf("  %-6s %14s %14s %8s %10s\n", "alg", "best", "average", "seed", "time[s]");
  for (const auto& r : record.results) {
    double total_time = 0;
    for (const auto& run : r.runs) total_time += run.wall_time_seconds;
    std::printf("  %-6s %14.6e %14.6e %8llu %10.3f\n", r.algorithm.c_str(), r.best.final_cost(),
                r.average_history.back(), static_cast<unsigned long long>(r.best.seed), total_time);
    if (r.histogram) {
      auto f = r.histogram->fidelity;
      std::sort(f.begin(), f.end());
      std::printf("         fidelity over %zu random inputs: min %.12f median %.12f\n", f.size(),
                  f.front(), f[f.size() / 2]);
    }
  }
  if (record.failed) std::printf("  run aborted: %s\n", record.failure.c_str());
}

// Runs one experiment and writes every artifact. Returns the exit status.
int run_and_write(const ExperimentConfig& config, const fs::path& dir) {
  const AggregateRecord record = run_experiment(config);
  export_json(record, dir);
  export_csv(record, dir);
  emit_plot(record, dir / "cost.svg");
  const CircuitTemplate tmpl(config.num_qubits, record.layers_used, config.entangler);
  for (const auto& r : record.results) {
    if (r.best.final_params.size() != tmpl.param_count()) continue;
    const ParameterVector params(Eigen::Map<const Eigen::VectorXd>(
        r.best.final_params.data(), static_cast<Eigen::Index>(r.best.final_params.size())));
    export_qasm(tmpl, params, dir / (r.algorithm + "_best.qasm"));
  }
  print_summary(record);
  std::printf("  wrote %s\n", dir.string().c_str());
  return record.failed ? 2 : 0;
}

int export_from_record(const std::string& record_path, const std::string& optimizer, const std::string& out) {
  const AggregateRecord record = record_from_json(read_text_file(record_path));
  const OptimizerResult* r = record.find(optimizer);
  if (!r) throw ConfigError("record has no results for optimizer '" + optimizer + "'");
  const CircuitTemplate tmpl(record.config.num_qubits, record.layers_used, record.config.entangler);
  const ParameterVector params(Eigen::Map<const Eigen::VectorXd>(
      r->best.final_params.data(), static_cast<Eigen::Index>(r->best.final_params.size())));
  if (out.empty() || out == "-") {
    std::cout << to_qasm(tmpl, params);
  } else {
    export_qasm(tmpl, params, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circuit optimization with iteratively preconditioned gradient descent"};
  app.set_version_flag("--version", std::string(toolkit_version()));
  app.require_subcommand(1);

  Overrides prep_o;
  std::string target = "ghz";
  auto* prep = app.add_subcommand("prepare-state", "Optimize a circuit preparing GHZ or W from |0...0>");
  prep->add_option("--target", target, "ghz or w")->check(CLI::IsMember({"ghz", "w"}));
  add_overrides(prep, prep_o);

  Overrides comp_o;
  std::string cost = "frobenius";
  auto* comp = app.add_subcommand("compile-unitary", "Compile the QFT unitary");
  comp->add_option("--cost", cost, "frobenius or matrix-distance")
      ->check(CLI::IsMember({"frobenius", "matrix-distance"}));
  add_overrides(comp, comp_o);

  Overrides bench_o;
  auto* bench = app.add_subcommand("bench", "Run configured experiments; all four when none is named");
  bench->add_option("--experiment", bench_o.experiment, "ghz, w, qft-matrix-distance or qft-frobenius");
  add_overrides(bench, bench_o);

  std::string record_path, qasm_optimizer = "ipg", qasm_out;
  auto* qasm = app.add_subcommand("export-qasm", "Write the best circuit of a record as OpenQASM 2.0");
  qasm->add_option("--record", record_path, "record.json written by a run")->required()->check(CLI::ExistingFile);
  qasm->add_option("--optimizer", qasm_optimizer, "Whose best circuit to export");
  qasm->add_option("--out", qasm_out, "Output file; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*prep) {
      prep_o.experiment = target;
      const auto c = build_config(ExperimentKind::GhzPrep, prep_o);
      return run_and_write(c, c.output_dir);
    }
    if (*comp) {
      comp_o.experiment = cost == "frobenius" ? "qft-frobenius" : "qft-matrix-distance";
      const auto c = build_config(ExperimentKind::QftFrobenius, comp_o);
      return run_and_write(c, c.output_dir);
    }
    if (*bench) {
      if (!bench_o.config_path.empty() || !bench_o.experiment.empty()) {
        const auto c = build_config(ExperimentKind::GhzPrep, bench_o);
        return run_and_write(c, c.output_dir);
      }
      int status = 0;
      for (auto kind : {ExperimentKind::GhzPrep, ExperimentKind::WPrep, ExperimentKind::QftMatrixDistance,
                        ExperimentKind::QftFrobenius}) {
        Overrides o = bench_o;
        o.experiment = std::string(to_string(kind));
        const auto c = build_config(kind, o);
        status = std::max(status, run_and_write(c, fs::path(c.output_dir) / to_string(kind)));
      }
      return status;
    }
    return export_from_record(record_path, qasm_optimizer, qasm_out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 2;
  }
}
