// Copyright 2026 The qactiv authors
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

#include <string>

#include "qactiv/gates.hpp"
#include "qactiv/schedule.hpp"

namespace qactiv {

// OPENQASM 2.0 with qelib1.inc gates only. Macro circuits may contain x,
// swap, ccx and cswap; a PhasePower is expanded into t/s/z; a
// multi-controlled X has no qelib1 equivalent and throws UnloweredMacro
// (lower the circuit first).
std::string export_qasm(const Circuit& circuit);

std::string export_qasm(const LoweredCircuit& circuit);

}  // namespace qactiv
