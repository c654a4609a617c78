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

#include "qactiv/basis_state.hpp"
#include "qactiv/gates.hpp"

namespace qactiv {

// ReLU on an n-bit sign-magnitude input. Qubit 0 is the sign, qubits 1..n-1
// the magnitude; output qubits n..2n-2 receive the magnitude when the sign
// is 0 and stay 0 otherwise. One X-conjugated shared-control Toffoli batch,
// so the lowered T-depth is 4 for every n >= 2.
Circuit build_relu(std::uint32_t n);

// in: n bits (sign + magnitude); out: the n-1 output bits.
BasisState relu_reference(const BasisState& in);

}  // namespace qactiv
