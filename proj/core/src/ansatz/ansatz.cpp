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

#include "ipgq/ansatz/ansatz.hpp"

#include <numbers>
#include <random>
#include <stdexcept>

#include "ipgq/errors.hpp"

namespace ipgq {

std::string_view to_string(EntanglerPattern pattern) {
  switch (pattern) {
    case EntanglerPattern::ChainEveryLayer: return "chain-every-layer";
    case EntanglerPattern::ChainBetweenLayers: return "chain-between-layers";
    case EntanglerPattern::RingStrided: return "ring-strided";
  }
  return "?";
}

EntanglerPattern entangler_from_string(std::string_view name) {
  if (name == "chain-every-layer") return EntanglerPattern::ChainEveryLayer;
  if (name == "chain-between-layers") return EntanglerPattern::ChainBetweenLayers;
  if (name == "ring-strided") return EntanglerPattern::RingStrided;
  throw ConfigError("unknown entangler pattern '" + std::string(name) +
                    "' (expected chain-every-layer, chain-between-layers or ring-strided)");
}

CircuitTemplate::CircuitTemplate(int num_qubits, int num_layers, EntanglerPattern pattern)
    : num_qubits_(num_qubits), num_layers_(num_layers), pattern_(pattern) {
  if (num_qubits < 1) throw std::invalid_argument("ansatz needs at least one qubit");
  if (num_layers < 1) throw std::invalid_argument("ansatz needs at least one layer");
  (void)dimension_for(num_qubits);
}

int CircuitTemplate::chain_count() const {
  if (num_qubits_ < 2) return 0;
  return pattern_ == EntanglerPattern::ChainBetweenLayers ? num_layers_ - 1 : num_layers_;
}

namespace {

// CNOTs of the entangling block after `layer`.
std::vector<GateSpec> entangler_block(const CircuitTemplate& tmpl, int layer) {
  const int q = tmpl.num_qubits();
  std::vector<GateSpec> block;
  if (layer >= tmpl.chain_count()) return block;
  if (tmpl.pattern() == EntanglerPattern::RingStrided) {
    const int stride = layer % (q - 1) + 1;
    for (int i = 0; i < q; ++i) block.push_back(GateSpec::cnot(i, (i + stride) % q));
  } else {
    for (int i = 0; i + 1 < q; ++i) block.push_back(GateSpec::cnot(i, i + 1));
  }
  return block;
}

}  // namespace

std::size_t CircuitTemplate::cnot_count() const {
  std::size_t n = 0;
  for (int layer = 0; layer < num_layers_; ++layer) n += entangler_block(*this, layer).size();
  return n;
}

std::string CircuitTemplate::description() const {
  return "q=" + std::to_string(num_qubits_) + " layers=" + std::to_string(num_layers_) +
         " entangler=" + std::string(to_string(pattern_));
}

std::vector<GateSpec> gate_list(const CircuitTemplate& tmpl) {
  const int q = tmpl.num_qubits();
  std::vector<GateSpec> gates;
  gates.reserve(tmpl.param_count() + tmpl.cnot_count());
  for (int layer = 0; layer < tmpl.num_layers(); ++layer) {
    for (int qubit = 0; qubit < q; ++qubit) {
      auto ref = [&](RotationSlot s) { return ParamRef{param_index(tmpl, layer, qubit, s)}; };
      gates.push_back(GateSpec::rz(qubit, ref(RotationSlot::Gamma)));
      gates.push_back(GateSpec::ry(qubit, ref(RotationSlot::Beta)));
      gates.push_back(GateSpec::rz(qubit, ref(RotationSlot::Alpha)));
    }
    for (const GateSpec& g : entangler_block(tmpl, layer)) gates.push_back(g);
  }
  return gates;
}

std::size_t param_index(const CircuitTemplate& tmpl, int layer, int qubit, RotationSlot slot) {
  if (layer < 0 || layer >= tmpl.num_layers() || qubit < 0 || qubit >= tmpl.num_qubits()) {
    throw std::out_of_range("param_index: layer/qubit out of range");
  }
  const auto s = static_cast<int>(slot);
  if (s < 0 || s > 2) throw std::out_of_range("param_index: bad rotation slot");
  return static_cast<std::size_t>((layer * tmpl.num_qubits() + qubit) * 3 + s);
}

ParameterVector random_init(const CircuitTemplate& tmpl, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
  ParameterVector p(tmpl.param_count());
  for (std::size_t i = 0; i < p.size(); ++i) {
    double v;
    do {
      v = dist(rng);
    } while (v <= -std::numbers::pi);
    p[i] = v;
  }
  return p;
}

}  // namespace ipgq
