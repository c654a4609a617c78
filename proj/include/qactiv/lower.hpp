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

#include "qactiv/gates.hpp"
#include "qactiv/schedule.hpp"

namespace qactiv {

// Rewrites every macro gate into {H, S, Sdg, T, Tdg, CNOT}.
//
// Maximal runs of Toffoli (or controlled-swap) gates that share their first
// control and act on otherwise disjoint qubits are lowered as one batch
// network, so such a run costs T-depth 4 regardless of its length. A
// multi-controlled X borrows the lowest-indexed qubits it does not touch as
// dirty ancillas and throws InsufficientAncillas when the circuit is too
// narrow.
LoweredCircuit lower(const Circuit& circuit);

}  // namespace qactiv
