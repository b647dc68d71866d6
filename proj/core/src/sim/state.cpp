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

#include "ipgq/sim/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ipgq {

namespace {

void check_qubits(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw std::invalid_argument("qubit count must be in [1, 30], got " + std::to_string(num_qubits));
  }
}

}  // namespace

std::size_t dimension_for(int num_qubits) {
  check_qubits(num_qubits);
  return std::size_t{1} << num_qubits;
}

StateVector::StateVector(int num_qubits)
    : num_qubits_(num_qubits),
      amps_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension_for(num_qubits)))) {}

StateVector::StateVector(int num_qubits, Eigen::VectorXcd amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amps_.size()) != dimension_for(num_qubits)) {
    throw std::invalid_argument("state vector length must be 2^q");
  }
}

UnitaryMatrix::UnitaryMatrix(int num_qubits)
    : num_qubits_(num_qubits),
      m_(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dimension_for(num_qubits)),
                                    static_cast<Eigen::Index>(dimension_for(num_qubits)))) {}

UnitaryMatrix::UnitaryMatrix(int num_qubits, Eigen::MatrixXcd entries)
    : num_qubits_(num_qubits), m_(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(dimension_for(num_qubits));
  if (m_.rows() != dim || m_.cols() != dim) {
    throw std::invalid_argument("unitary matrix must be 2^q x 2^q");
  }
}

StateVector UnitaryMatrix::apply(const StateVector& x) const {
  if (x.num_qubits() != num_qubits_) {
    throw std::invalid_argument("qubit count mismatch between operator and state");
  }
  return StateVector(num_qubits_, m_ * x.amplitudes());
}

double UnitaryMatrix::unitarity_deviation() const {
  const Eigen::MatrixXcd gram = m_.adjoint() * m_;
  return (gram - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
}

StateVector basis_state(int num_qubits, std::size_t k) {
  StateVector s(num_qubits);
  if (k >= s.dim()) {
    throw std::invalid_argument("basis index " + std::to_string(k) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
  }
  s[k] = 1.0;
  return s;
}

StateVector ghz_state(int num_qubits, GhzSign sign) {
  if (num_qubits < 2) throw std::invalid_argument("GHZ state needs at least 2 qubits");
  StateVector s(num_qubits);
  const double a = 1.0 / std::numbers::sqrt2;
  s[0] = a;
  s[s.dim() - 1] = sign == GhzSign::Plus ? a : -a;
  return s;
}

StateVector w_state(int num_qubits) {
  if (num_qubits < 2) throw std::invalid_argument("W state needs at least 2 qubits");
  StateVector s(num_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(num_qubits));
  for (int b = 0; b < num_qubits; ++b) s[std::size_t{1} << b] = a;
  return s;
}

UnitaryMatrix qft_unitary(int num_qubits) {
  const std::size_t n = dimension_for(num_qubits);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      // reduce the exponent first so large q keeps full phase precision
      const double phase = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = std::polar(scale, phase);
    }
  }
  return UnitaryMatrix(num_qubits, std::move(m));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("inner product of states with different qubit counts");
  }
  return a.amplitudes().dot(b.amplitudes());  // Eigen conjugates the left operand
}

}  // namespace ipgq
