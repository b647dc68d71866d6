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

#include "ipgq/bench/config.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>

#include "json.hpp"

#include "ipgq/errors.hpp"

namespace ipgq::bench {

using nlohmann::json;

namespace {

struct KindName {
  ExperimentKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {ExperimentKind::GhzPrep, "ghz"},
    {ExperimentKind::WPrep, "w"},
    {ExperimentKind::QftMatrixDistance, "qft-matrix-distance"},
    {ExperimentKind::QftFrobenius, "qft-frobenius"},
};

std::string_view bounds_name(optim::EigenBounds b) {
  return b == optim::EigenBounds::Exact ? "exact" : "gershgorin";
}

optim::EigenBounds bounds_from_string(const std::string& s) {
  if (s == "exact") return optim::EigenBounds::Exact;
  if (s == "gershgorin") return optim::EigenBounds::Gershgorin;
  throw ConfigError("unknown eigenvalue bounds '" + s + "'");
}

optim::PreconditionerInit init_from_string(const std::string& s) {
  for (auto init : {optim::PreconditionerInit::InverseScale, optim::PreconditionerInit::Identity,
                    optim::PreconditionerInit::Zero}) {
    if (to_string(init) == s) return init;
  }
  throw ConfigError("unknown preconditioner init '" + s + "'");
}

// Reads `key` into `out` when present; rejects values of the wrong type.
template <typename T>
void read(const json& j, const char* key, T& out) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("field '") + key + "' has the wrong type");
  }
}

void reject_unknown(const json& j, std::initializer_list<std::string_view> known, const char* where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || item.key() == k;
    if (!ok) throw ConfigError("unknown field '" + item.key() + "' in " + where);
  }
}

json optimizer_to_json(const optim::AlgorithmSettings& settings) {
  json j;
  j["algorithm"] = std::string(optim::algorithm_tag(settings));
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, optim::GdSettings>) {
          j["learning_rate"] = s.learning_rate;
        } else if constexpr (std::is_same_v<S, optim::AdamSettings>) {
          j["learning_rate"] = s.learning_rate;
          j["beta1"] = s.beta1;
          j["beta2"] = s.beta2;
          j["epsilon"] = s.epsilon;
        } else if constexpr (std::is_same_v<S, optim::LbfgsSettings>) {
          j["memory"] = s.memory;
          j["armijo_c"] = s.armijo_c;
          j["shrink"] = s.shrink;
          j["max_backtracks"] = s.max_backtracks;
        } else {
          j["delta"] = s.schedule.delta;
          j["beta_margin"] = s.schedule.beta_margin;
          j["alpha_safety"] = s.schedule.alpha_safety;
          j["bounds"] = std::string(bounds_name(s.schedule.bounds));
          j["init"] = std::string(to_string(s.init));
        }
      },
      settings);
  return j;
}

optim::AlgorithmSettings optimizer_from_json(json j) {
  if (j.is_string()) j = json{{"algorithm", j}};
  if (!j.is_object()) throw ConfigError("optimizer entry must be a name or an object");
  std::string tag;
  read(j, "algorithm", tag);
  if (tag == "gd") {
    reject_unknown(j, {"algorithm", "learning_rate"}, "gd settings");
    optim::GdSettings s;
    read(j, "learning_rate", s.learning_rate);
    return s;
  }
  if (tag == "adam") {
    reject_unknown(j, {"algorithm", "learning_rate", "beta1", "beta2", "epsilon"}, "adam settings");
    optim::AdamSettings s;
    read(j, "learning_rate", s.learning_rate);
    read(j, "beta1", s.beta1);
    read(j, "beta2", s.beta2);
    read(j, "epsilon", s.epsilon);
    return s;
  }
  if (tag == "lbfgs") {
    reject_unknown(j, {"algorithm", "memory", "armijo_c", "shrink", "max_backtracks"},
                   "lbfgs settings");
    optim::LbfgsSettings s;
    read(j, "memory", s.memory);
    read(j, "armijo_c", s.armijo_c);
    read(j, "shrink", s.shrink);
    read(j, "max_backtracks", s.max_backtracks);
    return s;
  }
  if (tag == "ipg") {
    reject_unknown(j, {"algorithm", "delta", "beta_margin", "alpha_safety", "bounds", "init"},
                   "ipg settings");
    optim::IpgSettings s;
    read(j, "delta", s.schedule.delta);
    read(j, "beta_margin", s.schedule.beta_margin);
    read(j, "alpha_safety", s.schedule.alpha_safety);
    std::string bounds(bounds_name(s.schedule.bounds));
    read(j, "bounds", bounds);
    s.schedule.bounds = bounds_from_string(bounds);
    std::string init(to_string(s.init));
    read(j, "init", init);
    s.init = init_from_string(init);
    return s;
  }
  throw ConfigError("unknown optimizer '" + tag + "'");
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "unknown";
}

ExperimentKind experiment_from_string(std::string_view name) {
  for (const auto& kn : kKindNames) {
    if (kn.name == name) return kn.kind;
  }
  throw ConfigError("unknown experiment '" + std::string(name) +
                    "' (expected ghz, w, qft-matrix-distance or qft-frobenius)");
}

bool is_unitary_experiment(ExperimentKind kind) {
  return kind == ExperimentKind::QftMatrixDistance || kind == ExperimentKind::QftFrobenius;
}

ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  switch (kind) {
    case ExperimentKind::GhzPrep:
      c.num_qubits = 5;
      c.num_layers = 3;
      c.iterations = 32;
      c.n_runs = 3;
      c.optimizers = {optim::GdSettings{}, optim::AdamSettings{}, optim::IpgSettings{}};
      break;
    case ExperimentKind::WPrep:
      c.num_qubits = 4;
      c.num_layers = 3;
      c.iterations = 64;
      c.n_runs = 2;
      c.optimizers = {optim::GdSettings{}, optim::AdamSettings{}, optim::LbfgsSettings{},
                      optim::IpgSettings{}};
      break;
    case ExperimentKind::QftMatrixDistance:
    case ExperimentKind::QftFrobenius:
      c.num_qubits = 3;
      c.num_layers = 5;
      c.iterations = kind == ExperimentKind::QftMatrixDistance ? 80 : 64;
      c.n_runs = 4;
      c.entangler = EntanglerPattern::RingStrided;
      c.optimizers = {optim::LbfgsSettings{}, optim::AdamSettings{}, optim::IpgSettings{}};
      break;
  }
  return c;
}

void validate(const ExperimentConfig& c) {
  if (c.num_qubits < 1 || c.num_qubits > 16) throw ConfigError("qubits must be in [1, 16]");
  if (c.kind == ExperimentKind::WPrep && c.num_qubits < 2) throw ConfigError("W state needs at least 2 qubits");
  if (c.num_layers < 1) throw ConfigError("layers must be at least 1");
  if (c.iterations < 0) throw ConfigError("iterations must be non-negative");
  if (c.n_runs < 1) throw ConfigError("runs must be at least 1");
  if (c.optimizers.empty()) throw ConfigError("no optimizers configured");
  if (is_unitary_experiment(c.kind) && c.histogram_samples < 1)
    throw ConfigError("histogram_samples must be at least 1");
  if (c.grow_layers) {
    if (!(c.grow_threshold > 0)) throw ConfigError("grow_threshold must be positive");
    if (c.max_layers < c.num_layers) throw ConfigError("max_layers is below layers");
  }
  for (const auto& s : c.optimizers) {
    optim::validate(optim::OptimizerConfig{s, c.iterations, c.tolerance});
  }
}

ExperimentConfig config_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j,
                 {"experiment", "qubits", "layers", "entangler", "optimizers", "iterations", "runs",
                  "base_seed", "shared_init", "ghz_sign", "histogram_samples", "tolerance",
                  "grow_layers", "grow_threshold", "max_layers", "output_dir"},
                 "config");
  if (!j.contains("experiment")) throw ConfigError("config is missing 'experiment'");
  std::string kind;
  read(j, "experiment", kind);
  ExperimentConfig c = default_config(experiment_from_string(kind));

  read(j, "qubits", c.num_qubits);
  read(j, "layers", c.num_layers);
  std::string entangler(to_string(c.entangler));
  read(j, "entangler", entangler);
  c.entangler = entangler_from_string(entangler);
  if (auto it = j.find("optimizers"); it != j.end()) {
    if (!it->is_array()) throw ConfigError("'optimizers' must be an array");
    c.optimizers.clear();
    for (const auto& o : *it) c.optimizers.push_back(optimizer_from_json(o));
  }
  read(j, "iterations", c.iterations);
  read(j, "runs", c.n_runs);
  read(j, "base_seed", c.base_seed);
  read(j, "shared_init", c.shared_init);
  std::string sign = c.ghz_sign == GhzSign::Plus ? "+" : "-";
  read(j, "ghz_sign", sign);
  if (sign != "+" && sign != "-") throw ConfigError("ghz_sign must be \"+\" or \"-\"");
  c.ghz_sign = sign == "+" ? GhzSign::Plus : GhzSign::Minus;
  read(j, "histogram_samples", c.histogram_samples);
  if (auto it = j.find("tolerance"); it != j.end() && !it->is_null()) {
    double tol = 0;
    read(j, "tolerance", tol);
    c.tolerance = tol;
  }
  read(j, "grow_layers", c.grow_layers);
  read(j, "grow_threshold", c.grow_threshold);
  read(j, "max_layers", c.max_layers);
  read(j, "output_dir", c.output_dir);
  validate(c);
  return c;
}

std::string config_to_json(const ExperimentConfig& c) {
  json j;
  j["experiment"] = std::string(to_string(c.kind));
  j["qubits"] = c.num_qubits;
  j["layers"] = c.num_layers;
  j["entangler"] = std::string(to_string(c.entangler));
  j["optimizers"] = json::array();
  for (const auto& s : c.optimizers) j["optimizers"].push_back(optimizer_to_json(s));
  j["iterations"] = c.iterations;
  j["runs"] = c.n_runs;
  j["base_seed"] = c.base_seed;
  j["shared_init"] = c.shared_init;
  j["ghz_sign"] = c.ghz_sign == GhzSign::Plus ? "+" : "-";
  j["histogram_samples"] = c.histogram_samples;
  j["tolerance"] = c.tolerance ? json(*c.tolerance) : json(nullptr);
  j["grow_layers"] = c.grow_layers;
  j["grow_threshold"] = c.grow_threshold;
  j["max_layers"] = c.max_layers;
  j["output_dir"] = c.output_dir;
  return j.dump(2);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return config_from_json(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::uint64_t run_seed(const ExperimentConfig& config, std::size_t optimizer_index, int run) {
  const std::uint64_t offset = config.shared_init ? 0 : 1000 * static_cast<std::uint64_t>(optimizer_index);
  return config.base_seed + offset + static_cast<std::uint64_t>(run);
}

}  // namespace ipgq::bench
