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

// Internal gate-stream emitters shared by the synthesis builders, the grid
// builder and lower(). Everything T-depth-critical funnels through here so
// the column discipline lives in exactly one place.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qactiv/gates.hpp"
#include "qactiv/schedule.hpp"
#include "qactiv/synthesis.hpp"

namespace qactiv::detail {

// Receives gates in their final program order. in_open_layer must reflect the
// greedy schedule of everything emitted so far, so packed columns can decide
// which gate opens the next layer.
struct NetSink {
  std::function<void(const Gate&)> emit;
  std::function<bool(QubitId)> in_open_layer;
};

// Sink that appends macro gates to a circuit while tracking its schedule.
class CircuitSink {
 public:
  explicit CircuitSink(Circuit& circuit)
      : circuit_(circuit), tracker_(circuit.qubit_count) {}

  NetSink sink() {
    return NetSink{
        [this](const Gate& g) {
          tracker_.feed(g.operands.data(), g.operands.size());
          circuit_.gates.push_back(g);
        },
        [this](QubitId q) { return tracker_.in_open_layer(q); },
    };
  }

 private:
  Circuit& circuit_;
  LayerTracker tracker_;
};

// Emits a column of commuting single-qubit gates so the greedy scheduler puts
// them all in one layer: one gate that conflicts with the open layer goes
// first (if any does), multi-gate expansions (PhasePower) go last so their
// tails cannot split the column.
void emit_packed_column(NetSink& sink, const std::vector<Gate>& column);

// One edge of a fan-out tree: the value at src is XORed into dst. Stages
// order the mirrored traversal; higher stage = deeper in the tree.
struct PlanEdge {
  QubitId src;
  QubitId dst;
  std::uint32_t stage;
};

struct FanoutPlan {
  QubitId root = 0;
  std::uint32_t stage_count = 0;
  std::vector<PlanEdge> edges;
};

// Balanced binary tree over the targets in their given order; root is
// targets[0].
FanoutPlan plan_index_fanout(const std::vector<QubitId>& targets);

// Expands one tree edge into an executable CNOT chain (identity effect on
// every qubit except dst, which receives src XOR dst).
using EdgeRouter = std::function<std::vector<Gate>(QubitId src, QubitId dst)>;

std::vector<Gate> direct_edge(QubitId src, QubitId dst);

// Emits deep-stage edges first, the middle section, then the mirrored edge
// list. Edges of equal stage act on disjoint qubits and are interleaved
// gate-by-gate so the scheduler can run them concurrently.
void emit_mirrored_fanout(NetSink& sink, const FanoutPlan& plan,
                          const EdgeRouter& route,
                          const std::function<void()>& middle);

// Convenience: mirrored fan-out of `source` into all targets, direct edges.
void emit_flat_fanout(NetSink& sink, QubitId source,
                      const std::vector<QubitId>& targets);

using FanoutEmitter = std::function<void(
    NetSink& sink, QubitId source, const std::vector<QubitId>& targets)>;

// The T-depth-4 shared-control Toffoli batch. `fanout` is called four times
// (twice over the targets, twice over the second controls) and may route
// however it likes as long as the net effect is the XOR fan-out.
void emit_shared_control_batch(NetSink& sink, QubitId shared,
                               const std::vector<ToffoliPair>& pairs,
                               const FanoutEmitter& fanout);

// Controlled-swap batch: CNOT conjugation around a Toffoli batch.
void emit_cswap_batch(NetSink& sink, QubitId control,
                      const std::vector<SwapPair>& pairs,
                      const FanoutEmitter& fanout);

}  // namespace qactiv::detail
