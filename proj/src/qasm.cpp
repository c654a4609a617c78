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

#include "qactiv/qasm.hpp"

#include <sstream>

namespace qactiv {

namespace {

std::string header(std::uint32_t qubits) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << qubits << "];\n";
  return os.str();
}

void one(std::ostringstream& os, const char* name, QubitId q) {
  os << name << " q[" << q << "];\n";
}

void two(std::ostringstream& os, const char* name, QubitId a, QubitId b) {
  os << name << " q[" << a << "],q[" << b << "];\n";
}

void three(std::ostringstream& os, const char* name, QubitId a, QubitId b,
           QubitId c) {
  os << name << " q[" << a << "],q[" << b << "],q[" << c << "];\n";
}

}  // namespace

std::string export_qasm(const Circuit& circuit) {
  validate(circuit);
  std::ostringstream os;
  os << header(circuit.qubit_count);
  for (const Gate& g : circuit.gates) {
    const auto& ops = g.operands;
    switch (g.kind) {
      case GateKind::H: one(os, "h", ops[0]); break;
      case GateKind::S: one(os, "s", ops[0]); break;
      case GateKind::Sdg: one(os, "sdg", ops[0]); break;
      case GateKind::T: one(os, "t", ops[0]); break;
      case GateKind::Tdg: one(os, "tdg", ops[0]); break;
      case GateKind::X: one(os, "x", ops[0]); break;
      case GateKind::CNOT: two(os, "cx", ops[0], ops[1]); break;
      case GateKind::Swap: two(os, "swap", ops[0], ops[1]); break;
      case GateKind::Toffoli: three(os, "ccx", ops[0], ops[1], ops[2]); break;
      case GateKind::CSwap: three(os, "cswap", ops[0], ops[1], ops[2]); break;
      case GateKind::PhasePower: {
        int m = ((g.param % 8) + 8) % 8;
        if (m & 1) one(os, "t", ops[0]);
        if (m & 2) one(os, "s", ops[0]);
        if (m & 4) one(os, "z", ops[0]);
        break;
      }
      case GateKind::MultiControlledX:
        throw UnloweredMacro(
            "multi-controlled X has no qelib1 form; lower the circuit before "
            "export");
    }
  }
  return os.str();
}

std::string export_qasm(const LoweredCircuit& circuit) {
  std::ostringstream os;
  os << header(circuit.qubit_count);
  for (const BasicGate& g : circuit.gates) {
    switch (g.kind) {
      case BasicKind::H: one(os, "h", g.q0); break;
      case BasicKind::S: one(os, "s", g.q0); break;
      case BasicKind::Sdg: one(os, "sdg", g.q0); break;
      case BasicKind::T: one(os, "t", g.q0); break;
      case BasicKind::Tdg: one(os, "tdg", g.q0); break;
      case BasicKind::CNOT: two(os, "cx", g.q0, g.q1); break;
    }
  }
  return os.str();
}

}  // namespace qactiv
