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

#include <complex>
#include <unordered_map>
#include <vector>

#include "qactiv/basis_state.hpp"
#include "qactiv/exact_amp.hpp"
#include "qactiv/gates.hpp"
#include "qactiv/schedule.hpp"

namespace qactiv {

bool is_permutation_circuit(const Circuit& circuit);

// Classical simulation of a permutation circuit (X, CNOT, Swap, Toffoli,
// CSwap, MultiControlledX). Throws NonPermutationGate on anything else.
BasisState simulate_macro(const Circuit& circuit, BasisState state);

// Dense double-precision statevector. Amplitude index bit q corresponds to
// qubit q. Uses the runtime-selected update kernels.
std::vector<std::complex<double>> simulate_statevector(
    const LoweredCircuit& circuit, const BasisState& input,
    std::uint32_t max_qubits = 20);

// Dense exact statevector over Z[w, 1/sqrt(2)].
std::vector<ExactAmplitude> simulate_statevector_exact(
    const LoweredCircuit& circuit, const BasisState& input,
    std::uint32_t max_qubits = 14);

// Sparse exact statevector keyed by basis state; scales with the support
// size rather than the qubit count, which suits circuits whose Hadamards are
// confined to self-uncomputing conjugation pairs.
using SparseState = std::unordered_map<BasisState, ExactAmplitude, BasisStateHash>;

SparseState simulate_sparse_exact(const LoweredCircuit& circuit,
                                  const BasisState& input,
                                  std::size_t max_support = std::size_t{1} << 22);

std::size_t amp_index_of(const BasisState& state);
BasisState state_of_amp_index(std::uint32_t width, std::size_t index);

}  // namespace qactiv
