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
#include <vector>

#include "qactiv/gates.hpp"

namespace qactiv {

struct ToffoliPair {
  QubitId control2;
  QubitId target;
};

struct SwapPair {
  QubitId a;
  QubitId b;
};

// CNOT tree that XORs `source` into every target, depth 2*ceil(lg m) + 1 and
// size 2m - 1 for m targets. T-depth 0.
Circuit build_fanout(std::uint32_t qubit_count, QubitId source,
                     const std::vector<QubitId>& targets);

// Clifford+T network applying Toffoli(shared, pairs[i].control2,
// pairs[i].target) for every i simultaneously, with T-depth 4 independent of
// the batch size. The shared control is fanned out so that all T gates of
// one column land in one layer; the residual phase on the shared control is
// a single PhasePower(m) gate.
Circuit build_shared_control_toffoli_batch(std::uint32_t qubit_count,
                                           QubitId shared_control,
                                           const std::vector<ToffoliPair>& pairs);

// Fredkin batch: swaps every pair under one shared control, T-depth 4.
Circuit build_cswap_batch(std::uint32_t qubit_count, QubitId control,
                          const std::vector<SwapPair>& pairs);

// Toffoli chain realizing an X on `target` controlled on every qubit in
// `controls`, using k - 2 borrowed ancillas that may hold arbitrary values
// and are restored (Barenco et al., "Elementary gates for quantum
// computation", 1995). Returns a macro circuit of 4k - 8 Toffoli gates for
// k >= 3 controls; k = 1 and k = 2 degenerate to CNOT and Toffoli.
Circuit build_multi_controlled_x(std::uint32_t qubit_count,
                                 const std::vector<QubitId>& controls,
                                 QubitId target,
                                 const std::vector<QubitId>& dirty_ancillas);

// The raw gate sequence of build_multi_controlled_x, for embedding.
std::vector<Gate> borrowed_ancilla_mcx_chain(const std::vector<QubitId>& controls,
                                             QubitId target,
                                             const std::vector<QubitId>& dirty);

// T-depth of one lowered k-controlled X: 0, 4, then 16k - 32.
std::uint64_t mcx_t_depth(std::uint32_t k);

}  // namespace qactiv
