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
#include <random>
#include <span>
#include <vector>

#include "ipgq/sim/circuit.hpp"

namespace ipgq {

/// |theta_1 - theta_2| with theta_1 = acos(Re<ref|cand>) and
/// theta_2 = asin(Im<ref|cand>), both arguments clamped to [-1, 1].
///
/// Zero for cand = ref and for cand = i * ref, but not for every global
/// phase: the two inverse functions use different branches, so e.g.
/// cand = -ref gives pi.
double delta_theta(const StateVector& reference, const StateVector& candidate);

/// Normalized vector of i.i.d. complex standard normal amplitudes.
StateVector haar_random_state(int num_qubits, std::mt19937_64& rng);

struct FidelitySamples {
  std::vector<double> fidelity;     // |<U_target x | U_circuit x>|
  std::vector<double> delta_theta;  // delta_theta(U_target x, U_circuit x)
};

/// Compares the circuit against `target` on `n_samples` Haar-random inputs.
/// Sample i draws from its own generator seeded with (seed, i), so the output
/// does not depend on evaluation order.
FidelitySamples fidelity_histogram(std::span<const GateSpec> gates, const ParameterVector& params,
                                   const UnitaryMatrix& target, std::size_t n_samples,
                                   std::uint64_t seed);

}  // namespace ipgq
