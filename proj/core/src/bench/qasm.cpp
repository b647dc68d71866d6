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

#include "ipgq/bench/qasm.hpp"

#include <cstdio>

#include "ipgq/bench/export.hpp"
#include "ipgq/errors.hpp"

namespace ipgq::bench {

std::string to_qasm(const CircuitTemplate& tmpl, const ParameterVector& params) {
  if (params.size() != tmpl.param_count()) {
    throw ConfigError("expected " + std::to_string(tmpl.param_count()) + " parameters, got " +
                      std::to_string(params.size()));
  }
  const int q = tmpl.num_qubits();
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(q) + "];\n";
  out += "creg c[" + std::to_string(q) + "];\n";
  char buf[64];
  for (const GateSpec& g : gate_list(tmpl)) {
    if (g.kind == GateKind::CNOT) {
      std::snprintf(buf, sizeof buf, "cx q[%d],q[%d];\n", g.control, g.target);
    } else {
      std::snprintf(buf, sizeof buf, "%s(%.17g) q[%d];\n", std::string(gate_name(g.kind)).c_str(),
                    resolve_angle(g, params), g.target);
    }
    out += buf;
  }
  return out;
}

void export_qasm(const CircuitTemplate& tmpl, const ParameterVector& params,
                 const std::filesystem::path& path) {
  write_text_file(path, to_qasm(tmpl, params));
}

}  // namespace ipgq::bench
