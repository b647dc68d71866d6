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

#include "ipgq/sim/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ipgq {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RZ: return "rz";
    case GateKind::RY: return "ry";
    case GateKind::CNOT: return "cx";
  }
  return "?";
}

void validate_gate(const GateSpec& gate, int num_qubits) {
  auto in_range = [&](int qubit) { return qubit >= 0 && qubit < num_qubits; };
  if (!in_range(gate.target)) {
    throw std::invalid_argument("gate target qubit " + std::to_string(gate.target) +
                                " out of range for " + std::to_string(num_qubits) + " qubits");
  }
  if (gate.kind == GateKind::CNOT) {
    if (!in_range(gate.control)) {
      throw std::invalid_argument("CNOT control qubit " + std::to_string(gate.control) + " out of range");
    }
    if (gate.control == gate.target) {
      throw std::invalid_argument("CNOT control and target must differ");
    }
  }
}

namespace kernels {

namespace {

inline std::size_t mask_of(int num_qubits, int qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

// Calls f(i0, i1) for every basis pair differing only in `qubit`.
template <typename F>
inline void for_each_pair(std::size_t dim, std::size_t mask, F&& f) {
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    f(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i | mask));
  }
}

}  // namespace

void rz(Batch amps, int num_qubits, int qubit, double theta) {
  const Complex lo = std::polar(1.0, -theta / 2);
  const Complex hi = std::polar(1.0, theta / 2);
  const std::size_t mask = mask_of(num_qubits, qubit);
  const auto dim = static_cast<std::size_t>(amps.rows());
  for (Eigen::Index c = 0; c < amps.cols(); ++c) {
    for_each_pair(dim, mask, [&](Eigen::Index i0, Eigen::Index i1) {
      amps(i0, c) *= lo;
      amps(i1, c) *= hi;
    });
  }
}

void ry(Batch amps, int num_qubits, int qubit, double theta) {
  const double cs = std::cos(theta / 2);
  const double sn = std::sin(theta / 2);
  const std::size_t mask = mask_of(num_qubits, qubit);
  const auto dim = static_cast<std::size_t>(amps.rows());
  for (Eigen::Index c = 0; c < amps.cols(); ++c) {
    for_each_pair(dim, mask, [&](Eigen::Index i0, Eigen::Index i1) {
      const Complex a0 = amps(i0, c);
      const Complex a1 = amps(i1, c);
      amps(i0, c) = cs * a0 - sn * a1;
      amps(i1, c) = sn * a0 + cs * a1;
    });
  }
}

void cnot(Batch amps, int num_qubits, int control, int target) {
  const std::size_t cmask = mask_of(num_qubits, control);
  const std::size_t tmask = mask_of(num_qubits, target);
  const auto dim = static_cast<std::size_t>(amps.rows());
  for (Eigen::Index c = 0; c < amps.cols(); ++c) {
    for_each_pair(dim, tmask, [&](Eigen::Index i0, Eigen::Index i1) {
      if (static_cast<std::size_t>(i0) & cmask) std::swap(amps(i0, c), amps(i1, c));
    });
  }
}

void apply(Batch amps, int num_qubits, const GateSpec& gate, double angle, bool adjoint) {
  const double t = adjoint ? -angle : angle;
  switch (gate.kind) {
    case GateKind::RZ: rz(amps, num_qubits, gate.target, t); break;
    case GateKind::RY: ry(amps, num_qubits, gate.target, t); break;
    case GateKind::CNOT: cnot(amps, num_qubits, gate.control, gate.target); break;
  }
}

void generator(Batch amps, int num_qubits, const GateSpec& gate) {
  const std::size_t mask = mask_of(num_qubits, gate.target);
  const auto dim = static_cast<std::size_t>(amps.rows());
  switch (gate.kind) {
    case GateKind::RZ: {
      // -iZ/2 = diag(-i/2, +i/2)
      const Complex lo(0.0, -0.5);
      const Complex hi(0.0, 0.5);
      for (Eigen::Index c = 0; c < amps.cols(); ++c) {
        for_each_pair(dim, mask, [&](Eigen::Index i0, Eigen::Index i1) {
          amps(i0, c) *= lo;
          amps(i1, c) *= hi;
        });
      }
      break;
    }
    case GateKind::RY: {
      // -iY/2 = [[0, -1/2], [1/2, 0]]
      for (Eigen::Index c = 0; c < amps.cols(); ++c) {
        for_each_pair(dim, mask, [&](Eigen::Index i0, Eigen::Index i1) {
          const Complex a0 = amps(i0, c);
          amps(i0, c) = -0.5 * amps(i1, c);
          amps(i1, c) = 0.5 * a0;
        });
      }
      break;
    }
    case GateKind::CNOT:
      throw std::logic_error("CNOT has no rotation generator");
  }
}

}  // namespace kernels

StateVector apply_rz(StateVector state, int qubit, double theta) {
  validate_gate(GateSpec::rz(qubit, theta), state.num_qubits());
  kernels::rz(state.amplitudes(), state.num_qubits(), qubit, theta);
  return state;
}

StateVector apply_ry(StateVector state, int qubit, double theta) {
  validate_gate(GateSpec::ry(qubit, theta), state.num_qubits());
  kernels::ry(state.amplitudes(), state.num_qubits(), qubit, theta);
  return state;
}

StateVector apply_cnot(StateVector state, int control, int target) {
  validate_gate(GateSpec::cnot(control, target), state.num_qubits());
  kernels::cnot(state.amplitudes(), state.num_qubits(), control, target);
  return state;
}

}  // namespace ipgq
