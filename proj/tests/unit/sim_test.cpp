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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ipgq/errors.hpp"
#include "ipgq/sim/circuit.hpp"
#include "ipgq/sim/gates.hpp"
#include "ipgq/sim/state.hpp"
#include "test_support.hpp"

namespace ipgq {
namespace {

using std::numbers::pi;
constexpr double kTol = 1e-12;
const Complex kI{0, 1};

void expect_amp(const StateVector& s, std::size_t k, Complex expected, double tol = kTol) {
  EXPECT_NEAR(std::abs(s[k] - expected), 0.0, tol) << "amplitude " << k << " is " << s[k];
}

TEST(RzTest, ZeroAngleIsIdentity) {
  auto s = apply_rz(basis_state(1, 0), 0, 0.0);
  expect_amp(s, 0, 1.0);
  expect_amp(s, 1, 0.0);
}

TEST(RzTest, HalfTurnPhases) {
  expect_amp(apply_rz(basis_state(1, 0), 0, pi), 0, -kI);
  expect_amp(apply_rz(basis_state(1, 1), 0, pi), 1, kI);
}

TEST(RyTest, Examples) {
  expect_amp(apply_ry(basis_state(1, 0), 0, 0.0), 0, 1.0);
  auto flipped = apply_ry(basis_state(1, 0), 0, pi);
  expect_amp(flipped, 0, 0.0);
  expect_amp(flipped, 1, 1.0);
  auto plus = apply_ry(basis_state(1, 0), 0, pi / 2);
  expect_amp(plus, 0, std::sqrt(0.5));
  expect_amp(plus, 1, std::sqrt(0.5));
}

TEST(CnotTest, Examples) {
  expect_amp(apply_cnot(basis_state(2, 0), 0, 1), 0, 1.0);
  expect_amp(apply_cnot(basis_state(2, 2), 0, 1), 3, 1.0);

  StateVector s(2);
  s[0] = std::sqrt(0.5);
  s[2] = std::sqrt(0.5);
  auto bell = apply_cnot(s, 0, 1);
  expect_amp(bell, 0, std::sqrt(0.5));
  expect_amp(bell, 2, 0.0);
  expect_amp(bell, 3, std::sqrt(0.5));
}

TEST(CnotTest, RejectsEqualOrOutOfRangeQubits) {
  EXPECT_THROW(apply_cnot(basis_state(2, 0), 1, 1), std::invalid_argument);
  EXPECT_THROW(apply_cnot(basis_state(2, 0), 0, 2), std::invalid_argument);
  EXPECT_THROW(apply_rz(basis_state(2, 0), -1, 0.1), std::invalid_argument);
}

TEST(QubitOrderTest, QubitZeroIsMostSignificant) {
  // Flipping qubit 0 of |000> gives index 4.
  expect_amp(apply_ry(basis_state(3, 0), 0, pi), 4, 1.0);
  expect_amp(apply_ry(basis_state(3, 0), 2, pi), 1, 1.0);
}

TEST(GateIdentityTest, RotationsCompose) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto psi = testing::random_state(2, rng);
    const double a = 0.37 * trial - 3, b = 1.1 - 0.21 * trial;
    auto lhs = apply_rz(apply_rz(psi, 1, a), 1, b);
    auto rhs = apply_rz(psi, 1, a + b);
    EXPECT_LT((lhs.amplitudes() - rhs.amplitudes()).norm(), kTol);
    auto back = apply_ry(apply_ry(psi, 0, a), 0, -a);
    EXPECT_LT((back.amplitudes() - psi.amplitudes()).norm(), kTol);
    auto twice = apply_cnot(apply_cnot(psi, 0, 1), 0, 1);
    EXPECT_LT((twice.amplitudes() - psi.amplitudes()).norm(), kTol);
  }
}

TEST(StateTest, BasisStateRange) {
  EXPECT_THROW(basis_state(2, 4), std::invalid_argument);
  EXPECT_THROW(basis_state(0, 0), std::invalid_argument);
  EXPECT_EQ(basis_state(3, 5).dim(), 8u);
}

TEST(StateTest, GhzExamples) {
  const double r = std::sqrt(0.5);
  auto minus2 = ghz_state(2, GhzSign::Minus);
  expect_amp(minus2, 0, r);
  expect_amp(minus2, 3, -r);

  auto g5 = ghz_state(5, GhzSign::Minus);
  for (std::size_t k = 0; k < 32; ++k) {
    if (k != 0 && k != 31) expect_amp(g5, k, 0.0);
  }
  expect_amp(g5, 0, r);
  expect_amp(g5, 31, -r);

  auto plus3 = ghz_state(3, GhzSign::Plus);
  expect_amp(plus3, 0, r);
  expect_amp(plus3, 7, r);
  EXPECT_THROW(ghz_state(1, GhzSign::Plus), std::invalid_argument);
}

TEST(StateTest, WExamples) {
  auto w4 = w_state(4);
  for (std::size_t k = 0; k < 16; ++k) {
    const bool one_hot = k == 1 || k == 2 || k == 4 || k == 8;
    expect_amp(w4, k, one_hot ? 0.5 : 0.0);
  }
  auto w3 = w_state(3);
  for (std::size_t k : {1u, 2u, 4u}) expect_amp(w3, k, 1 / std::sqrt(3.0));
  auto w2 = w_state(2);
  expect_amp(w2, 1, std::sqrt(0.5));
  expect_amp(w2, 2, std::sqrt(0.5));
  EXPECT_THROW(w_state(1), std::invalid_argument);
}

TEST(StateTest, InnerProductExamples) {
  std::mt19937_64 rng(3);
  auto psi = testing::random_state(3, rng);
  EXPECT_NEAR(std::abs(inner_product(psi, psi) - 1.0), 0.0, kTol);
  EXPECT_EQ(inner_product(basis_state(1, 0), basis_state(1, 1)), Complex(0));
  auto plus = apply_ry(basis_state(1, 0), 0, pi / 2);
  EXPECT_NEAR(std::abs(inner_product(basis_state(1, 0), plus) - std::sqrt(0.5)), 0.0, kTol);
  EXPECT_THROW(inner_product(basis_state(1, 0), basis_state(2, 0)), std::invalid_argument);
}

TEST(StateTest, InnerProductConjugatesLeft) {
  StateVector a(1), b(1);
  a[0] = kI;
  b[0] = 1.0;
  EXPECT_EQ(inner_product(a, b), -kI);
}

TEST(QftTest, OneQubitIsHadamard) {
  auto u = qft_unitary(1);
  const double r = std::sqrt(0.5);
  EXPECT_NEAR(std::abs(u(0, 0) - r), 0, kTol);
  EXPECT_NEAR(std::abs(u(0, 1) - r), 0, kTol);
  EXPECT_NEAR(std::abs(u(1, 0) - r), 0, kTol);
  EXPECT_NEAR(std::abs(u(1, 1) + r), 0, kTol);
}

TEST(QftTest, TwoQubitEntry) { EXPECT_NEAR(std::abs(qft_unitary(2)(1, 1) - kI / 2.0), 0, kTol); }

TEST(QftTest, UnitaryForSeveralSizes) {
  for (int q = 1; q <= 6; ++q) EXPECT_LT(qft_unitary(q).unitarity_deviation(), kTol) << "q=" << q;
}

TEST(QftTest, ZeroInputGivesUniformSuperposition) {
  auto y = qft_unitary(3).apply(basis_state(3, 0));
  for (std::size_t k = 0; k < 8; ++k) expect_amp(y, k, 1 / std::sqrt(8.0));
}

TEST(CircuitTest, UnitaryExamples) {
  EXPECT_TRUE(circuit_unitary({}, ParameterVector{}, 1).matrix().isIdentity(kTol));

  const std::vector<GateSpec> ry{GateSpec::ry(0, pi)};
  Eigen::Matrix2cd expected;
  expected << 0, -1, 1, 0;
  EXPECT_TRUE(circuit_unitary(ry, ParameterVector{}, 1).matrix().isApprox(expected, kTol));

  const std::vector<GateSpec> cx{GateSpec::cnot(0, 1)};
  Eigen::Matrix4cd perm = Eigen::Matrix4cd::Zero();
  perm(0, 0) = perm(1, 1) = perm(3, 2) = perm(2, 3) = 1;
  EXPECT_TRUE(circuit_unitary(cx, ParameterVector{}, 2).matrix().isApprox(perm, kTol));
}

TEST(CircuitTest, ColumnsMatchBasisAction) {
  std::mt19937_64 rng(11);
  for (int q = 1; q <= 4; ++q) {
    const auto gates = testing::random_gate_sequence(q, 30, rng);
    const auto u = circuit_unitary(gates, ParameterVector{}, q);
    EXPECT_LT(u.unitarity_deviation(), 1e-10);
    for (std::size_t j = 0; j < u.dim(); ++j) {
      const auto col = run_circuit(gates, ParameterVector{}, basis_state(q, j));
      EXPECT_LT((u.matrix().col(static_cast<Eigen::Index>(j)) - col.amplitudes()).cwiseAbs().maxCoeff(), kTol);
    }
  }
}

TEST(CircuitTest, ParameterReferencesResolve) {
  const std::vector<GateSpec> gates{GateSpec::ry(0, ParamRef{1}), GateSpec::rz(0, ParamRef{0})};
  ParameterVector p(Eigen::Vector2d(0.3, pi));
  auto out = run_circuit(gates, p, basis_state(1, 0));
  auto manual = apply_rz(apply_ry(basis_state(1, 0), 0, pi), 0, 0.3);
  EXPECT_LT((out.amplitudes() - manual.amplitudes()).norm(), kTol);

  EXPECT_THROW(run_circuit(gates, ParameterVector(1), basis_state(1, 0)), ConfigError);
  EXPECT_THROW(circuit_unitary(gates, ParameterVector(1), 1), ConfigError);
}

TEST(CircuitTest, NormPreservedOverRandomCircuits) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> qubits(1, 6);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int q = qubits(rng);
    const auto gates = testing::random_gate_sequence(q, 25, rng);
    const auto out = run_circuit(gates, ParameterVector{}, testing::random_state(q, rng));
    worst = std::max(worst, std::abs(out.norm() - 1));
  }
  EXPECT_LT(worst, 1e-10);
}

}  // namespace
}  // namespace ipgq
