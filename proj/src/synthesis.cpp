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

#include "qactiv/synthesis.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "emit.hpp"

namespace qactiv {

namespace {

void require_distinct(std::vector<QubitId> qubits, const char* what) {
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    throw OverlappingPairs(std::string(what) + " share a qubit");
  }
}

}  // namespace

Circuit build_fanout(std::uint32_t qubit_count, QubitId source,
                     const std::vector<QubitId>& targets) {
  if (targets.empty()) {
    throw EmptyTargets("fan-out needs at least one target");
  }
  std::vector<QubitId> all(targets);
  all.push_back(source);
  require_distinct(all, "fan-out source and targets");
  Circuit c;
  c.qubit_count = qubit_count;
  detail::CircuitSink cs(c);
  detail::NetSink sink = cs.sink();
  detail::emit_flat_fanout(sink, source, targets);
  validate(c);
  return c;
}

Circuit build_shared_control_toffoli_batch(std::uint32_t qubit_count,
                                           QubitId shared_control,
                                           const std::vector<ToffoliPair>& pairs) {
  if (pairs.empty()) {
    throw EmptyTargets("batch needs at least one pair");
  }
  std::vector<QubitId> all{shared_control};
  for (const ToffoliPair& p : pairs) {
    all.push_back(p.control2);
    all.push_back(p.target);
  }
  require_distinct(all, "batch pairs");
  Circuit c;
  c.qubit_count = qubit_count;
  detail::CircuitSink cs(c);
  detail::NetSink sink = cs.sink();
  detail::emit_shared_control_batch(sink, shared_control, pairs,
                                    detail::emit_flat_fanout);
  validate(c);
  return c;
}

Circuit build_cswap_batch(std::uint32_t qubit_count, QubitId control,
                          const std::vector<SwapPair>& pairs) {
  if (pairs.empty()) {
    throw EmptyTargets("swap batch needs at least one pair");
  }
  std::vector<QubitId> all{control};
  for (const SwapPair& p : pairs) {
    all.push_back(p.a);
    all.push_back(p.b);
  }
  require_distinct(all, "swap pairs");
  Circuit c;
  c.qubit_count = qubit_count;
  detail::CircuitSink cs(c);
  detail::NetSink sink = cs.sink();
  detail::emit_cswap_batch(sink, control, pairs, detail::emit_flat_fanout);
  validate(c);
  return c;
}

std::vector<Gate> borrowed_ancilla_mcx_chain(const std::vector<QubitId>& controls,
                                             QubitId target,
                                             const std::vector<QubitId>& dirty) {
  std::size_t k = controls.size();
  if (k == 0) {
    throw EmptyTargets("multi-controlled X needs at least one control");
  }
  if (k == 1) {
    return {Gate::cnot(controls[0], target)};
  }
  if (k == 2) {
    return {Gate::toffoli(controls[0], controls[1], target)};
  }
  if (dirty.size() < k - 2) {
    throw InsufficientAncillas("need " + std::to_string(k - 2) +
                               " borrowed ancillas for " + std::to_string(k) +
                               " controls, have " +
                               std::to_string(dirty.size()));
  }
  // Two sweeps of a V-shaped Toffoli ladder; the second sweep uncomputes the
  // ancillas, which therefore may start in any state.
  std::vector<Gate> seq;
  auto half = [&] {
    seq.push_back(Gate::toffoli(controls[k - 1], dirty[k - 3], target));
    for (std::size_t j = k - 2; j >= 2; --j) {
      seq.push_back(Gate::toffoli(controls[j], dirty[j - 2], dirty[j - 1]));
    }
    seq.push_back(Gate::toffoli(controls[0], controls[1], dirty[0]));
    for (std::size_t j = 2; j <= k - 2; ++j) {
      seq.push_back(Gate::toffoli(controls[j], dirty[j - 2], dirty[j - 1]));
    }
  };
  half();
  half();
  return seq;
}

Circuit build_multi_controlled_x(std::uint32_t qubit_count,
                                 const std::vector<QubitId>& controls,
                                 QubitId target,
                                 const std::vector<QubitId>& dirty_ancillas) {
  std::vector<QubitId> all(controls);
  all.push_back(target);
  std::size_t used = controls.size() >= 3 ? controls.size() - 2 : 0;
  for (std::size_t i = 0; i < used && i < dirty_ancillas.size(); ++i) {
    all.push_back(dirty_ancillas[i]);
  }
  require_distinct(all, "controls, target and ancillas");
  Circuit c;
  c.qubit_count = qubit_count;
  c.gates = borrowed_ancilla_mcx_chain(controls, target, dirty_ancillas);
  validate(c);
  return c;
}

std::uint64_t mcx_t_depth(std::uint32_t k) {
  if (k <= 1) {
    return 0;
  }
  if (k == 2) {
    return 4;
  }
  return 16ull * k - 32ull;
}

}  // namespace qactiv
