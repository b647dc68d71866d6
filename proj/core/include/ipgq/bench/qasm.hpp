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

#include <filesystem>
#include <string>

#include "ipgq/ansatz/ansatz.hpp"

namespace ipgq::bench {

/// OpenQASM 2.0 listing of the ansatz with the given angles: header,
/// qreg/creg of size q, then rz/ry/cx lines in gate_list order with angles
/// printed to 17 significant digits.
std::string to_qasm(const CircuitTemplate& tmpl, const ParameterVector& params);

void export_qasm(const CircuitTemplate& tmpl, const ParameterVector& params,
                 const std::filesystem::path& path);

}  // namespace ipgq::bench
