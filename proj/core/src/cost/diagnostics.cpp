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

#include "ipgq/cost/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ipgq {

double delta_theta(const StateVector& reference, const StateVector& candidate) {
  const Complex overlap = inner_product(reference, candidate);
  const double re = std::clamp(overlap.real(), -1.0, 1.0);
  const double im = std::clamp(overlap.imag(), -1.0, 1.0);
  return std::abs(std::acos(re) - std::asin(im));
}

StateVector haar_random_state(int num_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  StateVector s(num_qubits);
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    s[k] = Complex(re, im);
  }
  s.amplitudes() /= s.norm();
  return s;
}

FidelitySamples fidelity_histogram(std::span<const GateSpec> gates, const ParameterVector& params,
                                   const UnitaryMatrix& target, std::size_t n_samples,
                                   std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("fidelity_histogram needs at least one sample");
  const int q = target.num_qubits();
  const UnitaryMatrix circuit = circuit_unitary(gates, params, q);

  FidelitySamples out;
  out.fidelity.reserve(n_samples);
  out.delta_theta.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    const StateVector x = haar_random_state(q, rng);
    const StateVector ideal = target.apply(x);
    const StateVector actual = circuit.apply(x);
    out.fidelity.push_back(std::abs(inner_product(ideal, actual)));
    out.delta_theta.push_back(delta_theta(ideal, actual));
  }
  return out;
}

}  // namespace ipgq
