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

#include "qactiv/gates.hpp"

#include <algorithm>

namespace qactiv {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::CNOT: return "cnot";
    case GateKind::X: return "x";
    case GateKind::Swap: return "swap";
    case GateKind::Toffoli: return "toffoli";
    case GateKind::MultiControlledX: return "multi_controlled_x";
    case GateKind::CSwap: return "cswap";
    case GateKind::PhasePower: return "phase_power";
  }
  return "?";
}

const char* to_string(QubitRole role) {
  switch (role) {
    case QubitRole::Input: return "input";
    case QubitRole::Output: return "output";
    case QubitRole::SwapAddress: return "swap_address";
    case QubitRole::Garbage: return "garbage";
    case QubitRole::Unused: return "unused";
  }
  return "?";
}

bool is_basic(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::CNOT:
      return true;
    default:
      return false;
  }
}

Gate Gate::multi_controlled_x(std::vector<QubitId> controls, QubitId t) {
  Gate g{GateKind::MultiControlledX, std::move(controls), 0};
  g.operands.push_back(t);
  std::vector<QubitId> sorted = g.operands;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DuplicateOperand("multi-controlled X operands must be distinct");
  }
  return g;
}

namespace {

// Expected operand count, or 0 for variable arity.
std::size_t fixed_arity(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::X:
    case GateKind::PhasePower:
      return 1;
    case GateKind::CNOT:
    case GateKind::Swap:
      return 2;
    case GateKind::Toffoli:
    case GateKind::CSwap:
      return 3;
    case GateKind::MultiControlledX:
      return 0;
  }
  return 0;
}

}  // namespace

void validate(const Circuit& circuit) {
  if (!circuit.roles.empty() && circuit.roles.size() != circuit.qubit_count) {
    throw BadRoleVector("role vector length " +
                        std::to_string(circuit.roles.size()) +
                        " does not match qubit count " +
                        std::to_string(circuit.qubit_count));
  }
  for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi) {
    const Gate& g = circuit.gates[gi];
    std::size_t want = fixed_arity(g.kind);
    if (want != 0 && g.operands.size() != want) {
      throw BadOperandCount("gate " + std::to_string(gi) + " (" +
                            to_string(g.kind) + ") has " +
                            std::to_string(g.operands.size()) + " operands");
    }
    if (g.kind == GateKind::MultiControlledX && g.operands.size() < 2) {
      throw BadOperandCount("gate " + std::to_string(gi) +
                            " (multi_controlled_x) needs a control and a "
                            "target");
    }
    for (QubitId q : g.operands) {
      if (q >= circuit.qubit_count) {
        throw OutOfRangeQubit("gate " + std::to_string(gi) + " touches qubit " +
                              std::to_string(q) + " outside width " +
                              std::to_string(circuit.qubit_count));
      }
    }
    std::vector<QubitId> sorted(g.operands);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw DuplicateOperand("gate " + std::to_string(gi) +
                             " repeats an operand");
    }
  }
}

}  // namespace qactiv
