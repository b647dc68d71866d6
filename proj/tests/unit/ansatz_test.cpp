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

#include <algorithm>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "ipgq/ansatz/ansatz.hpp"
#include "ipgq/errors.hpp"
#include "ipgq/sim/circuit.hpp"

namespace ipgq {
namespace {

std::size_t count_kind(const std::vector<GateSpec>& gates, GateKind kind) {
  return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [&](const GateSpec& g) { return g.kind == kind; }));
}

std::size_t count_parameterized(const std::vector<GateSpec>& gates) {
  return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [](const GateSpec& g) { return g.is_parameterized(); }));
}

TEST(GateListTest, SingleQubitSingleLayer) {
  const auto gates = gate_list(CircuitTemplate(1, 1));
  ASSERT_EQ(gates.size(), 3u);
  EXPECT_EQ(gates[0].kind, GateKind::RZ);
  EXPECT_EQ(gates[1].kind, GateKind::RY);
  EXPECT_EQ(gates[2].kind, GateKind::RZ);
}

TEST(GateListTest, GhzSizedTemplate) {
  const CircuitTemplate t(5, 3);
  const auto gates = gate_list(t);
  EXPECT_EQ(t.param_count(), 45u);
  EXPECT_EQ(count_parameterized(gates), 45u);
  EXPECT_EQ(count_kind(gates, GateKind::CNOT), 12u);
  EXPECT_EQ(t.cnot_count(), 12u);
}

TEST(GateListTest, WSizedTemplate) {
  const CircuitTemplate t(4, 3);
  EXPECT_EQ(count_parameterized(gate_list(t)), 36u);
}

TEST(GateListTest, ChainBetweenLayersOmitsFinalChain) {
  const CircuitTemplate t(4, 3, EntanglerPattern::ChainBetweenLayers);
  const auto gates = gate_list(t);
  EXPECT_EQ(count_kind(gates, GateKind::CNOT), 6u);
  EXPECT_EQ(t.chain_count(), 2);
  EXPECT_EQ(gates.back().kind, GateKind::RZ);
}

TEST(GateListTest, ChainIsDescendingNearestNeighbour) {
  const auto gates = gate_list(CircuitTemplate(3, 1));
  ASSERT_EQ(gates.size(), 11u);
  EXPECT_EQ(gates[9], GateSpec::cnot(0, 1));
  EXPECT_EQ(gates[10], GateSpec::cnot(1, 2));
}

TEST(GateListTest, RingStridedUsesLayerDependentStride) {
  const CircuitTemplate t(3, 3, EntanglerPattern::RingStrided);
  const auto gates = gate_list(t);
  std::vector<GateSpec> cx;
  for (const auto& g : gates) {
    if (g.kind == GateKind::CNOT) cx.push_back(g);
  }
  ASSERT_EQ(cx.size(), 9u);
  EXPECT_EQ(t.cnot_count(), 9u);
  // stride 1, then 2, then 1 again
  EXPECT_EQ(cx[0], GateSpec::cnot(0, 1));
  EXPECT_EQ(cx[2], GateSpec::cnot(2, 0));
  EXPECT_EQ(cx[3], GateSpec::cnot(0, 2));
  EXPECT_EQ(cx[4], GateSpec::cnot(1, 0));
  EXPECT_EQ(cx[6], GateSpec::cnot(0, 1));
}

TEST(GateListTest, EveryParameterAppearsOnce) {
  for (auto pattern : {EntanglerPattern::ChainEveryLayer, EntanglerPattern::ChainBetweenLayers,
                       EntanglerPattern::RingStrided}) {
    const CircuitTemplate t(4, 3, pattern);
    std::multiset<std::size_t> seen;
    for (const auto& g : gate_list(t)) {
      if (g.is_parameterized()) seen.insert(g.param_index());
    }
    ASSERT_EQ(seen.size(), t.param_count());
    for (std::size_t k = 0; k < t.param_count(); ++k) EXPECT_EQ(seen.count(k), 1u);
  }
}

TEST(GateListTest, ZeroParametersFixAllZeroState) {
  for (auto pattern : {EntanglerPattern::ChainEveryLayer, EntanglerPattern::ChainBetweenLayers,
                       EntanglerPattern::RingStrided}) {
    const CircuitTemplate t(4, 2, pattern);
    const auto out = run_circuit(gate_list(t), ParameterVector(t.param_count()), basis_state(4, 0));
    EXPECT_NEAR(std::abs(out[0] - Complex(1)), 0, 1e-15) << to_string(pattern);
  }
}

TEST(GateListTest, GammaActsFirst) {
  const CircuitTemplate t(1, 1);
  const ParameterVector p(Eigen::Vector3d(0.4, 1.3, -0.7));  // gamma, beta, alpha
  StateVector plus = apply_ry(basis_state(1, 0), 0, std::numbers::pi / 2);
  const auto out = run_circuit(gate_list(t), p, plus);
  const auto manual = apply_rz(apply_ry(apply_rz(plus, 0, 0.4), 0, 1.3), 0, -0.7);
  EXPECT_LT((out.amplitudes() - manual.amplitudes()).norm(), 1e-15);
  const auto swapped = apply_rz(apply_ry(apply_rz(plus, 0, -0.7), 0, 1.3), 0, 0.4);
  EXPECT_GT((out.amplitudes() - swapped.amplitudes()).norm(), 1e-3);
}

TEST(ParamIndexTest, Examples) {
  EXPECT_EQ(param_index(CircuitTemplate(5, 3), 0, 0, RotationSlot::Gamma), 0u);
  EXPECT_EQ(param_index(CircuitTemplate(5, 3), 2, 4, RotationSlot::Alpha), 44u);
  EXPECT_EQ(param_index(CircuitTemplate(4, 3), 1, 0, RotationSlot::Gamma), 12u);
}

TEST(ParamIndexTest, Bijective) {
  const CircuitTemplate t(3, 4);
  std::set<std::size_t> seen;
  for (int l = 0; l < 4; ++l)
    for (int q = 0; q < 3; ++q)
      for (auto s : {RotationSlot::Gamma, RotationSlot::Beta, RotationSlot::Alpha}) seen.insert(param_index(t, l, q, s));
  EXPECT_EQ(seen.size(), t.param_count());
  EXPECT_EQ(*seen.rbegin(), t.param_count() - 1);
}

TEST(ParamIndexTest, OutOfRange) {
  const CircuitTemplate t(2, 2);
  EXPECT_THROW(param_index(t, 2, 0, RotationSlot::Gamma), std::out_of_range);
  EXPECT_THROW(param_index(t, 0, 2, RotationSlot::Gamma), std::out_of_range);
  EXPECT_THROW(param_index(t, -1, 0, RotationSlot::Beta), std::out_of_range);
}

TEST(TemplateTest, RejectsEmptyShapes) {
  EXPECT_THROW(CircuitTemplate(0, 1), std::invalid_argument);
  EXPECT_THROW(CircuitTemplate(1, 0), std::invalid_argument);
}

TEST(TemplateTest, EntanglerNames) {
  for (auto p : {EntanglerPattern::ChainEveryLayer, EntanglerPattern::ChainBetweenLayers, EntanglerPattern::RingStrided})
    EXPECT_EQ(entangler_from_string(to_string(p)), p);
  EXPECT_THROW(entangler_from_string("star"), ConfigError);
}

TEST(RandomInitTest, DeterministicPerSeed) {
  const CircuitTemplate t(5, 3);
  EXPECT_EQ(random_init(t, 9), random_init(t, 9));
  EXPECT_FALSE(random_init(t, 9) == random_init(t, 10));
  EXPECT_EQ(random_init(t, 9).size(), 45u);
}

TEST(RandomInitTest, UniformOnOpenInterval) {
  const CircuitTemplate t(20, 1667);  // 100020 draws
  const auto p = random_init(t, 1);
  const Eigen::VectorXd& v = p.values();
  EXPECT_LT(std::abs(v.mean()), 0.02);
  EXPECT_GT(v.minCoeff(), -std::numbers::pi);
  EXPECT_LT(v.maxCoeff(), std::numbers::pi);
  // Variance of U(-pi, pi) is pi^2 / 3.
  const double var = (v.array() - v.mean()).square().mean();
  EXPECT_NEAR(var, std::numbers::pi * std::numbers::pi / 3, 0.05);
}

}  // namespace
}  // namespace ipgq
