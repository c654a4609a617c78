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

#include "qactiv/schedule.hpp"

namespace qactiv {

const char* to_string(BasicKind kind) {
  switch (kind) {
    case BasicKind::H: return "h";
    case BasicKind::S: return "s";
    case BasicKind::Sdg: return "sdg";
    case BasicKind::T: return "t";
    case BasicKind::Tdg: return "tdg";
    case BasicKind::CNOT: return "cnot";
  }
  return "?";
}

LayeredCircuit schedule_layers(const LoweredCircuit& circuit) {
  LayeredCircuit out;
  out.qubit_count = circuit.qubit_count;
  LayerTracker tracker(circuit.qubit_count);
  for (const BasicGate& g : circuit.gates) {
    std::uint64_t layer = tracker.feed(g);
    if (layer == out.layers.size()) {
      out.layers.emplace_back();
    }
    out.layers[layer].push_back(g);
  }
  return out;
}

Metrics compute_metrics(const LoweredCircuit& circuit) {
  Metrics m;
  m.qubit_count = circuit.qubit_count;
  m.size = circuit.gates.size();
  LayerTracker tracker(circuit.qubit_count);
  std::vector<bool> layer_has_t;
  for (const BasicGate& g : circuit.gates) {
    std::uint64_t layer = tracker.feed(g);
    if (layer == layer_has_t.size()) {
      layer_has_t.push_back(false);
    }
    if (g.is_t()) {
      ++m.t_count;
      layer_has_t[layer] = true;
    }
  }
  m.depth = layer_has_t.size();
  for (bool has_t : layer_has_t) {
    m.t_depth += has_t ? 1 : 0;
  }
  return m;
}

}  // namespace qactiv
