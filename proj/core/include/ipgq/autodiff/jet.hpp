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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ipgq/sim/circuit.hpp"

namespace ipgq {

/// Symmetric n x n array storing one element per unordered pair, so that
/// (j, k) and (k, j) alias the same object.
template <typename T>
class SymmetricArray {
 public:
  SymmetricArray(std::size_t n, const T& prototype) : n_(n), data_(n * (n + 1) / 2, prototype) {}

  std::size_t size() const { return n_; }

  const T& operator()(std::size_t j, std::size_t k) const { return data_[offset(j, k)]; }
  T& operator()(std::size_t j, std::size_t k) { return data_[offset(j, k)]; }

 private:
  static std::size_t offset(std::size_t j, std::size_t k) {
    if (j > k) std::swap(j, k);
    return k * (k + 1) / 2 + j;
  }

  std::size_t n_;
  std::vector<T> data_;
};

/// Circuit output together with its parameter derivatives.
struct StateJet {
  StateVector value;
  std::vector<StateVector> gradient;                   // d psi / d theta_k
  std::optional<SymmetricArray<StateVector>> hessian;  // d2 psi / d theta_j d theta_k
};

struct UnitaryJet {
  UnitaryMatrix value;
  std::vector<UnitaryMatrix> gradient;
  std::optional<SymmetricArray<UnitaryMatrix>> hessian;
};

// Derivatives by generator insertion: for a gate exp(-i t P / 2) bound to
// parameter k, d/d theta_k inserts -iP/2 right after that gate. A parameter
// bound to several gates sums their insertions. Mixed second derivatives
// insert at both positions; a repeated insertion at one gate is
// (-iP/2)^2 = -I/4.
//
// Cost: the gradient runs one suffix circuit per parameterized gate; the
// Hessian runs one suffix per ordered gate pair a < b. Both stay within
// N_p + 1 and N_p (N_p + 1) / 2 + N_p + 1 circuit evaluations.

StateJet state_gradient(std::span<const GateSpec> gates, const ParameterVector& params,
                        const StateVector& input);

/// Value, gradient and Hessian.
StateJet state_hessian(std::span<const GateSpec> gates, const ParameterVector& params,
                       const StateVector& input);

/// Column j of every derivative equals the state derivative for input |j>.
UnitaryJet unitary_gradient(std::span<const GateSpec> gates, const ParameterVector& params,
                            int num_qubits, bool with_hessian = false);

}  // namespace ipgq
