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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ipgq/sim/circuit.hpp"

namespace ipgq {

/// CNOT block placed after each rotation layer.
enum class EntanglerPattern {
  ChainEveryLayer,     // chain 0->1, 1->2, ..., q-2->q-1 after every layer
  ChainBetweenLayers,  // same chain, omitted after the last layer
  RingStrided,         // i -> (i + r) mod q for every i, r = layer mod (q-1) + 1
};

std::string_view to_string(EntanglerPattern pattern);
EntanglerPattern entangler_from_string(std::string_view name);  // throws ConfigError

/// The three angles of one R = Rz(alpha) Ry(beta) Rz(gamma) block, listed in
/// application order: gamma acts first.
enum class RotationSlot { Gamma = 0, Beta = 1, Alpha = 2 };

/// Layered ansatz: every layer applies Rz-Ry-Rz to each qubit, followed by a
/// CNOT chain per the entangler pattern. Immutable once built.
class CircuitTemplate {
 public:
  CircuitTemplate(int num_qubits, int num_layers,
                  EntanglerPattern pattern = EntanglerPattern::ChainEveryLayer);

  int num_qubits() const { return num_qubits_; }
  int num_layers() const { return num_layers_; }
  EntanglerPattern pattern() const { return pattern_; }

  /// 3 * q * layers
  std::size_t param_count() const { return 3 * static_cast<std::size_t>(num_qubits_) * num_layers_; }

  /// Number of entangling blocks emitted. A chain block has q - 1 CNOTs, a
  /// ring block has q.
  int chain_count() const;

  std::size_t cnot_count() const;

  /// e.g. "q=5 layers=3 entangler=chain-every-layer"
  std::string description() const;

  bool operator==(const CircuitTemplate&) const = default;

 private:
  int num_qubits_;
  int num_layers_;
  EntanglerPattern pattern_;
};

/// Gates per layer: Rz(gamma), Ry(beta), Rz(alpha) on qubit 0, then qubit 1,
/// and so on, followed by that layer's entangling block.
std::vector<GateSpec> gate_list(const CircuitTemplate& tmpl);

/// Layer-major, then qubit, then slot. Throws std::out_of_range.
std::size_t param_index(const CircuitTemplate& tmpl, int layer, int qubit, RotationSlot slot);

/// Independent Uniform(-pi, pi) draws from std::mt19937_64 seeded with `seed`.
/// Endpoint -pi is rejected so every value lies in the open interval.
ParameterVector random_init(const CircuitTemplate& tmpl, std::uint64_t seed);

}  // namespace ipgq
