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

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace ipgq {

using Complex = std::complex<double>;

/// Pure state of `num_qubits` qubits as 2^q dense amplitudes.
///
/// Basis index k is read as a bit string with qubit 0 in the most significant
/// position, so index 0 is |0...0> and index 2^q - 1 is |1...1>.
class StateVector {
 public:
  explicit StateVector(int num_qubits);
  StateVector(int num_qubits, Eigen::VectorXcd amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }

  Complex operator[](std::size_t k) const { return amps_[static_cast<Eigen::Index>(k)]; }
  Complex& operator[](std::size_t k) { return amps_[static_cast<Eigen::Index>(k)]; }

  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }

  double norm() const { return amps_.norm(); }

 private:
  int num_qubits_;
  Eigen::VectorXcd amps_;
};

/// Dense 2^q x 2^q operator. Column j is the image of basis state j.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(int num_qubits);  // identity
  UnitaryMatrix(int num_qubits, Eigen::MatrixXcd entries);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::MatrixXcd& matrix() { return m_; }

  StateVector apply(const StateVector& x) const;

  /// max |(U^dagger U - I)_{ij}|
  double unitarity_deviation() const;

 private:
  int num_qubits_;
  Eigen::MatrixXcd m_;
};

std::size_t dimension_for(int num_qubits);

StateVector basis_state(int num_qubits, std::size_t k);

enum class GhzSign { Plus, Minus };

/// (|0...0> +/- |1...1>) / sqrt(2); requires q >= 2.
StateVector ghz_state(int num_qubits, GhzSign sign);

/// Equal superposition of the q one-hot basis strings; requires q >= 2.
StateVector w_state(int num_qubits);

/// Fourier matrix with entry (k, j) = w^{jk} / 2^{q/2}, w = exp(2 pi i / 2^q).
/// No bit-reversal stage.
UnitaryMatrix qft_unitary(int num_qubits);

/// <a|b> = sum_k conj(a_k) b_k
Complex inner_product(const StateVector& a, const StateVector& b);

}  // namespace ipgq
