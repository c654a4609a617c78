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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qactiv/basis_state.hpp"
#include "qactiv/gates.hpp"

namespace qactiv {

struct EquivResult {
  bool equal = false;
  // a = w^phase_exponent * b over the whole unitary when equal.
  int phase_exponent = 0;
  std::string detail;
};

// Exact unitary comparison, up to one global eighth-root-of-unity phase.
// Both circuits are simulated column by column over Z[w, 1/sqrt(2)];
// permutation circuits take a classical fast path. Width is capped because
// the cost is 4^n.
EquivResult check_unitary_equiv(const Circuit& a, const Circuit& b,
                                std::uint32_t max_qubits = 10);

struct FunctionalSpec {
  // Maps the bits read from input_qubits to the bits expected on
  // output_qubits.
  std::function<BasisState(const BasisState&)> oracle;
  std::vector<QubitId> input_qubits;
  std::vector<QubitId> output_qubits;
  // Inputs must come back unchanged.
  bool require_inputs_preserved = true;
  // Qubits that must end in |0> regardless of input (beyond outputs).
  std::vector<QubitId> must_stay_zero;
  // Exhaustive when the input register is at most this wide.
  std::uint32_t exhaustive_limit = 20;
  std::uint64_t samples = 4096;
  std::uint64_t seed = 0x51c2ab5ddu;
};

struct FunctionalReport {
  bool ok = false;
  std::uint64_t checked = 0;
  bool exhaustive = false;
  std::string detail;
};

// Runs the circuit on basis states (all non-input qubits start at 0).
// Permutation circuits run classically; otherwise the circuit is lowered and
// simulated exactly, and the final state must be the oracle's basis state
// with amplitude exactly 1.
FunctionalReport verify_functional(const Circuit& circuit,
                                   const FunctionalSpec& spec);

}  // namespace qactiv
