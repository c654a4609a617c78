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

#include "qactiv/lower.hpp"

#include <string>
#include <vector>

#include "emit.hpp"

namespace qactiv {

namespace {

class LowerSink {
 public:
  explicit LowerSink(LoweredCircuit& out)
      : out_(out), tracker_(out.qubit_count) {}

  void basic(BasicKind kind, QubitId q0) {
    tracker_.feed(q0);
    out_.gates.push_back({kind, q0, 0});
  }

  void basic_cnot(QubitId c, QubitId t) {
    tracker_.feed(c, t);
    out_.gates.push_back({BasicKind::CNOT, c, t});
  }

  void phase_power(QubitId q, int k) {
    int m = ((k % 8) + 8) % 8;
    // T component first: when this expansion closes a packed T column, the T
    // must land in the column's layer before the S/Z tail opens a new one.
    if (m & 1) {
      basic(BasicKind::T, q);
    }
    if (m & 2) {
      basic(BasicKind::S, q);
    }
    if (m & 4) {
      basic(BasicKind::S, q);
      basic(BasicKind::S, q);
    }
  }

  // Lowers a gate whose kind has a fixed local expansion.
  void simple(const Gate& g) {
    switch (g.kind) {
      case GateKind::H:
        basic(BasicKind::H, g.operands[0]);
        return;
      case GateKind::S:
        basic(BasicKind::S, g.operands[0]);
        return;
      case GateKind::Sdg:
        basic(BasicKind::Sdg, g.operands[0]);
        return;
      case GateKind::T:
        basic(BasicKind::T, g.operands[0]);
        return;
      case GateKind::Tdg:
        basic(BasicKind::Tdg, g.operands[0]);
        return;
      case GateKind::CNOT:
        basic_cnot(g.operands[0], g.operands[1]);
        return;
      case GateKind::X:
        basic(BasicKind::H, g.operands[0]);
        basic(BasicKind::S, g.operands[0]);
        basic(BasicKind::S, g.operands[0]);
        basic(BasicKind::H, g.operands[0]);
        return;
      case GateKind::Swap:
        basic_cnot(g.operands[0], g.operands[1]);
        basic_cnot(g.operands[1], g.operands[0]);
        basic_cnot(g.operands[0], g.operands[1]);
        return;
      case GateKind::PhasePower:
        phase_power(g.operands[0], g.param);
        return;
      default:
        throw Error("gate kind has no local lowering");
    }
  }

  detail::NetSink net() {
    return detail::NetSink{
        [this](const Gate& g) { simple(g); },
        [this](QubitId q) { return tracker_.in_open_layer(q); },
    };
  }

 private:
  LoweredCircuit& out_;
  LayerTracker tracker_;
};

// Marks qubits of an accumulating run with a generation counter so run
// discovery is O(run length).
class TouchSet {
 public:
  explicit TouchSet(std::uint32_t qubits) : gen_of_(qubits, 0) {}

  void clear() { ++gen_; }
  void add(QubitId q) { gen_of_[q] = gen_; }
  bool contains(QubitId q) const { return gen_of_[q] == gen_; }

 private:
  std::vector<std::uint64_t> gen_of_;
  std::uint64_t gen_ = 1;
};

}  // namespace

LoweredCircuit lower(const Circuit& circuit) {
  validate(circuit);
  LoweredCircuit out;
  out.qubit_count = circuit.qubit_count;
  out.roles = circuit.roles;
  LowerSink sink(out);
  detail::NetSink net = sink.net();
  TouchSet touched(circuit.qubit_count);

  const std::vector<Gate>& gates = circuit.gates;
  std::size_t i = 0;
  while (i < gates.size()) {
    const Gate& g = gates[i];
    switch (g.kind) {
      case GateKind::Toffoli: {
        QubitId shared = g.operands[0];
        touched.clear();
        touched.add(shared);
        std::vector<ToffoliPair> pairs;
        std::size_t j = i;
        while (j < gates.size() && gates[j].kind == GateKind::Toffoli &&
               gates[j].operands[0] == shared &&
               !touched.contains(gates[j].operands[1]) &&
               !touched.contains(gates[j].operands[2])) {
          pairs.push_back({gates[j].operands[1], gates[j].operands[2]});
          touched.add(gates[j].operands[1]);
          touched.add(gates[j].operands[2]);
          ++j;
        }
        detail::emit_shared_control_batch(net, shared, pairs,
                                          detail::emit_flat_fanout);
        i = j;
        break;
      }
      case GateKind::CSwap: {
        QubitId shared = g.operands[0];
        touched.clear();
        touched.add(shared);
        std::vector<SwapPair> pairs;
        std::size_t j = i;
        while (j < gates.size() && gates[j].kind == GateKind::CSwap &&
               gates[j].operands[0] == shared &&
               !touched.contains(gates[j].operands[1]) &&
               !touched.contains(gates[j].operands[2])) {
          pairs.push_back({gates[j].operands[1], gates[j].operands[2]});
          touched.add(gates[j].operands[1]);
          touched.add(gates[j].operands[2]);
          ++j;
        }
        detail::emit_cswap_batch(net, shared, pairs, detail::emit_flat_fanout);
        i = j;
        break;
      }
      case GateKind::MultiControlledX: {
        std::vector<QubitId> controls(g.operands.begin(),
                                      g.operands.end() - 1);
        QubitId target = g.operands.back();
        std::size_t k = controls.size();
        if (k == 1) {
          sink.basic_cnot(controls[0], target);
        } else {
          std::vector<Gate> chain;
          if (k == 2) {
            chain.push_back(Gate::toffoli(controls[0], controls[1], target));
          } else {
            touched.clear();
            for (QubitId q : g.operands) {
              touched.add(q);
            }
            std::vector<QubitId> dirty;
            for (QubitId q = 0; q < circuit.qubit_count && dirty.size() < k - 2;
                 ++q) {
              if (!touched.contains(q)) {
                dirty.push_back(q);
              }
            }
            if (dirty.size() < k - 2) {
              throw InsufficientAncillas(
                  "multi-controlled X on " + std::to_string(k) +
                  " controls needs " + std::to_string(k - 2) +
                  " borrowed qubits; circuit width " +
                  std::to_string(circuit.qubit_count) + " leaves only " +
                  std::to_string(dirty.size()));
            }
            chain = borrowed_ancilla_mcx_chain(controls, target, dirty);
          }
          for (const Gate& tof : chain) {
            std::vector<ToffoliPair> one{
                {tof.operands[1], tof.operands[2]}};
            detail::emit_shared_control_batch(net, tof.operands[0], one,
                                              detail::emit_flat_fanout);
          }
        }
        ++i;
        break;
      }
      default:
        sink.simple(g);
        ++i;
        break;
    }
  }
  return out;
}

}  // namespace qactiv
