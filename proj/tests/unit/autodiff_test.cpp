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

#include "ipgq/ansatz/ansatz.hpp"
#include "ipgq/autodiff/finite_difference.hpp"
#include "ipgq/autodiff/jet.hpp"
#include "ipgq/autodiff/overlap.hpp"
#include "test_support.hpp"

namespace ipgq {
namespace {

using std::numbers::pi;

// FD derivative of the output state along coordinate k, componentwise.
Eigen::VectorXcd fd_state_derivative(std::span<const GateSpec> gates, const ParameterVector& p,
                                     const StateVector& input, std::size_t k, double h) {
  Eigen::VectorXd plus = p.values(), minus = p.values();
  plus[static_cast<Eigen::Index>(k)] += h;
  minus[static_cast<Eigen::Index>(k)] -= h;
  return (run_circuit(gates, ParameterVector(plus), input).amplitudes() -
          run_circuit(gates, ParameterVector(minus), input).amplitudes()) /
         (2 * h);
}

Eigen::VectorXcd fd_state_second(std::span<const GateSpec> gates, const ParameterVector& p,
                                 const StateVector& input, std::size_t j, std::size_t k, double h) {
  auto at = [&](double dj, double dk) {
    Eigen::VectorXd x = p.values();
    x[static_cast<Eigen::Index>(j)] += dj;
    x[static_cast<Eigen::Index>(k)] += dk;
    return run_circuit(gates, ParameterVector(x), input).amplitudes();
  };
  if (j == k) return (at(h, 0) - 2.0 * at(0, 0) + at(-h, 0)) / (h * h);
  return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
}

TEST(StateGradientTest, SingleRyClosedForm) {
  const std::vector<GateSpec> gates{GateSpec::ry(0, ParamRef{0})};
  const auto jet = state_gradient(gates, ParameterVector(Eigen::VectorXd::Constant(1, pi / 2)), basis_state(1, 0));
  ASSERT_EQ(jet.gradient.size(), 1u);
  EXPECT_NEAR(std::abs(jet.gradient[0][0] - Complex(-std::sqrt(2.0) / 4)), 0, 1e-15);
  EXPECT_NEAR(std::abs(jet.gradient[0][1] - Complex(std::sqrt(2.0) / 4)), 0, 1e-15);
  EXPECT_FALSE(jet.hessian.has_value());
}

TEST(StateGradientTest, RzOnZeroHasHalfNorm) {
  for (double theta : {-2.0, 0.0, 0.7, 3.0}) {
    const std::vector<GateSpec> gates{GateSpec::rz(0, ParamRef{0})};
    const auto jet = state_gradient(gates, ParameterVector(Eigen::VectorXd::Constant(1, theta)), basis_state(1, 0));
    const Complex expected = Complex(0, -0.5) * std::exp(Complex(0, -theta / 2));
    EXPECT_NEAR(std::abs(jet.gradient[0][0] - expected), 0, 1e-15);
    EXPECT_NEAR(jet.gradient[0].norm(), 0.5, 1e-15);
  }
}

TEST(StateGradientTest, IdentityInitializedCircuitMatchesFd) {
  const CircuitTemplate t(3, 2);
  const auto gates = gate_list(t);
  const ParameterVector p(t.param_count());
  const auto input = basis_state(3, 0);
  const auto jet = state_gradient(gates, p, input);
  double worst = 0;
  for (std::size_t k = 0; k < t.param_count(); ++k) {
    const auto fd = fd_state_derivative(gates, p, input, k, 1e-5);
    worst = std::max(worst, (jet.gradient[k].amplitudes() - fd).cwiseAbs().maxCoeff());
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(StateGradientTest, NormBoundAndOrthogonality) {
  std::mt19937_64 rng(5);
  const CircuitTemplate t(3, 3);
  const auto gates = gate_list(t);
  for (int trial = 0; trial < 5; ++trial) {
    const ParameterVector p(testing::random_angles(t.param_count(), rng));
    const auto jet = state_gradient(gates, p, testing::random_state(3, rng));
    for (const auto& d : jet.gradient) {
      EXPECT_LE(d.norm(), 0.5 + 1e-12);
      EXPECT_LT(std::abs(inner_product(jet.value, d).real()), 1e-12);
    }
  }
}

TEST(StateHessianTest, SingleRyDiagonalIsMinusQuarterPsi) {
  const std::vector<GateSpec> gates{GateSpec::ry(0, ParamRef{0})};
  const auto jet = state_hessian(gates, ParameterVector(Eigen::VectorXd::Constant(1, 0.8)), basis_state(1, 0));
  ASSERT_TRUE(jet.hessian.has_value());
  EXPECT_LT(((*jet.hessian)(0, 0).amplitudes() + jet.value.amplitudes() / 4).norm(), 1e-15);
}

TEST(StateHessianTest, CommutingRzProductRule) {
  // psi = RZ(a) x RZ(b) |++>, so d2 psi / da db = (-i Z/2) x (-i Z/2) psi.
  const std::vector<GateSpec> gates{GateSpec::ry(0, pi / 2), GateSpec::ry(1, pi / 2),
                                    GateSpec::rz(0, ParamRef{0}), GateSpec::rz(1, ParamRef{1})};
  const ParameterVector p(Eigen::Vector2d(0.3, -1.1));
  const auto jet = state_hessian(gates, p, basis_state(2, 0));
  Eigen::VectorXcd expected = jet.value.amplitudes();
  const double z0[] = {1, 1, -1, -1}, z1[] = {1, -1, 1, -1};
  for (int k = 0; k < 4; ++k) expected[k] *= Complex(0, -0.5 * z0[k]) * Complex(0, -0.5 * z1[k]);
  EXPECT_LT(((*jet.hessian)(0, 1).amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(StateHessianTest, FourQubitTwoLayerMatchesFd) {
  std::mt19937_64 rng(17);
  const CircuitTemplate t(4, 2);
  const auto gates = gate_list(t);
  const ParameterVector p(testing::random_angles(t.param_count(), rng));
  const auto input = basis_state(4, 0);
  const auto jet = state_hessian(gates, p, input);
  double worst = 0;
  for (std::size_t j = 0; j < t.param_count(); ++j) {
    for (std::size_t k = j; k < t.param_count(); ++k) {
      const auto fd = fd_state_second(gates, p, input, j, k, 1e-4);
      worst = std::max(worst, ((*jet.hessian)(j, k).amplitudes() - fd).cwiseAbs().maxCoeff());
    }
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(SymmetricArrayTest, EntriesAlias) {
  SymmetricArray<int> a(3, 0);
  a(0, 2) = 7;
  EXPECT_EQ(a(2, 0), 7);
  EXPECT_EQ(&a(1, 2), &a(2, 1));
}

TEST(SymmetricArrayTest, SharedParameterAccumulates) {
  // One parameter bound to two gates: d/dtheta of RY(theta) RY(theta) = RY(2 theta).
  const std::vector<GateSpec> gates{GateSpec::ry(0, ParamRef{0}), GateSpec::ry(0, ParamRef{0})};
  const ParameterVector p(Eigen::VectorXd::Constant(1, 0.4));
  const auto jet = state_hessian(gates, p, basis_state(1, 0));
  const Eigen::Vector2cd d1(-std::sin(0.4), std::cos(0.4));
  const Eigen::Vector2cd d2(-std::cos(0.4), -std::sin(0.4));
  EXPECT_LT((jet.gradient[0].amplitudes() - d1).norm(), 1e-14);
  EXPECT_LT(((*jet.hessian)(0, 0).amplitudes() - d2).norm(), 1e-14);
}

TEST(UnitaryGradientTest, ColumnsMatchStateGradient) {
  std::mt19937_64 rng(23);
  const CircuitTemplate t(3, 2, EntanglerPattern::RingStrided);
  const auto gates = gate_list(t);
  const ParameterVector p(testing::random_angles(t.param_count(), rng));
  const auto uj = unitary_gradient(gates, p, 3, true);
  for (std::size_t j = 0; j < 8; ++j) {
    const auto sj = state_hessian(gates, p, basis_state(3, j));
    const auto col = static_cast<Eigen::Index>(j);
    for (std::size_t k = 0; k < t.param_count(); ++k) {
      EXPECT_LT((uj.gradient[k].matrix().col(col) - sj.gradient[k].amplitudes()).norm(), 1e-13);
      EXPECT_LT(((*uj.hessian)(k, 0).matrix().col(col) - (*sj.hessian)(k, 0).amplitudes()).norm(), 1e-13);
    }
  }
}

TEST(UnitaryGradientTest, ZeroAngleRzEntriesHaveMagnitudeHalf) {
  const std::vector<GateSpec> gates{GateSpec::rz(1, ParamRef{0})};
  const auto uj = unitary_gradient(gates, ParameterVector(1), 2);
  const Eigen::MatrixXcd& d = uj.gradient[0].matrix();
  for (Eigen::Index k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(d(k, k)), 0.5, 1e-15);
  EXPECT_NEAR((d - Eigen::MatrixXcd(d.diagonal().asDiagonal())).norm(), 0, 1e-15);
}

TEST(UnitaryGradientTest, UnitarityDifferentiates) {
  std::mt19937_64 rng(29);
  const CircuitTemplate t(2, 3);
  const auto gates = gate_list(t);
  const ParameterVector p(testing::random_angles(t.param_count(), rng));
  const auto uj = unitary_gradient(gates, p, 2);
  const Eigen::MatrixXcd& b = uj.value.matrix();
  for (const auto& d : uj.gradient) {
    const Eigen::MatrixXcd m = d.matrix().adjoint() * b;
    EXPECT_LT((m + m.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(UnitaryGradientTest, MatchesFd) {
  std::mt19937_64 rng(31);
  const CircuitTemplate t(2, 2);
  const auto gates = gate_list(t);
  const ParameterVector p(testing::random_angles(t.param_count(), rng));
  const auto uj = unitary_gradient(gates, p, 2);
  double worst = 0;
  for (std::size_t k = 0; k < t.param_count(); ++k) {
    Eigen::VectorXd plus = p.values(), minus = p.values();
    plus[static_cast<Eigen::Index>(k)] += 1e-5;
    minus[static_cast<Eigen::Index>(k)] -= 1e-5;
    const Eigen::MatrixXcd fd = (circuit_unitary(gates, ParameterVector(plus), 2).matrix() -
                                 circuit_unitary(gates, ParameterVector(minus), 2).matrix()) / 2e-5;
    worst = std::max(worst, (uj.gradient[k].matrix() - fd).cwiseAbs().maxCoeff());
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(OverlapJetTest, AgreesWithExplicitJets) {
  std::mt19937_64 rng(37);
  for (auto pattern : {EntanglerPattern::ChainEveryLayer, EntanglerPattern::RingStrided}) {
    const CircuitTemplate t(3, 3, pattern);
    const auto gates = gate_list(t);
    const ParameterVector p(testing::random_angles(t.param_count(), rng));
    const auto target = testing::random_unitary(3, rng);
    const auto oj = overlap_jet(gates, p, target.matrix(), Eigen::MatrixXcd::Identity(8, 8), 3, 1.0 / 8,
                                DerivativeOrder::Hessian);
    const auto uj = unitary_gradient(gates, p, 3, true);
    auto contract = [&](const UnitaryMatrix& m) { return (target.matrix().adjoint() * m.matrix()).trace() / 8.0; };
    EXPECT_LT(std::abs(oj.value - contract(uj.value)), 1e-12);
    for (std::size_t j = 0; j < t.param_count(); ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      EXPECT_LT(std::abs(oj.gradient[jj] - contract(uj.gradient[j])), 1e-12);
      for (std::size_t k = 0; k < t.param_count(); ++k) {
        EXPECT_LT(std::abs(oj.hessian(jj, static_cast<Eigen::Index>(k)) - contract((*uj.hessian)(j, k))), 1e-12);
      }
    }
    EXPECT_EQ(oj.hessian, oj.hessian.transpose().eval());
  }
}

TEST(OverlapJetTest, LowerOrdersLeaveFieldsEmpty) {
  const CircuitTemplate t(2, 1);
  const auto gates = gate_list(t);
  const Eigen::MatrixXcd e0 = basis_state(2, 0).amplitudes();
  const auto v = overlap_jet(gates, ParameterVector(t.param_count()), e0, e0, 2, 1.0, DerivativeOrder::Value);
  EXPECT_EQ(v.gradient.size(), 0);
  EXPECT_EQ(v.hessian.size(), 0);
  EXPECT_NEAR(std::abs(v.value - Complex(1)), 0, 1e-15);
  const auto g = overlap_jet(gates, ParameterVector(t.param_count()), e0, e0, 2, 1.0, DerivativeOrder::Gradient);
  EXPECT_EQ(g.gradient.size(), 6);
  EXPECT_EQ(g.hessian.size(), 0);
}

TEST(FiniteDifferenceTest, Examples) {
  const ScalarFunction square = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
  EXPECT_NEAR(fd_gradient(square, Eigen::VectorXd::Ones(1))[0], 2.0, 1e-9);
  const ScalarFunction constant = [](const Eigen::VectorXd&) { return 3.5; };
  EXPECT_EQ(fd_gradient(constant, Eigen::VectorXd::Ones(4)), Eigen::VectorXd::Zero(4));
  const auto h = fd_hessian(square, Eigen::Vector3d(0.2, -1, 4));
  EXPECT_TRUE(h.isApprox(2 * Eigen::Matrix3d::Identity(), 1e-6));
  EXPECT_EQ(h, h.transpose());
  EXPECT_THROW(fd_gradient(square, Eigen::VectorXd::Ones(1), 0.0), std::invalid_argument);
  EXPECT_THROW(fd_hessian(square, Eigen::VectorXd::Ones(1), -1e-4), std::invalid_argument);
}

}  // namespace
}  // namespace ipgq
