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

#include "qactiv/sim.hpp"

#include <string>
#include <utility>

#include "kernels/kernels.hpp"

namespace qactiv {

bool is_permutation_circuit(const Circuit& circuit) {
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::X:
      case GateKind::CNOT:
      case GateKind::Swap:
      case GateKind::Toffoli:
      case GateKind::CSwap:
      case GateKind::MultiControlledX:
        break;
      default:
        return false;
    }
  }
  return true;
}

BasisState simulate_macro(const Circuit& circuit, BasisState state) {
  if (state.width() != circuit.qubit_count) {
    throw Error("input width " + std::to_string(state.width()) +
                " does not match circuit width " +
                std::to_string(circuit.qubit_count));
  }
  for (const Gate& g : circuit.gates) {
    const auto& ops = g.operands;
    switch (g.kind) {
      case GateKind::X:
        state.flip(ops[0]);
        break;
      case GateKind::CNOT:
        if (state.get(ops[0])) {
          state.flip(ops[1]);
        }
        break;
      case GateKind::Swap: {
        bool a = state.get(ops[0]);
        state.set(ops[0], state.get(ops[1]));
        state.set(ops[1], a);
        break;
      }
      case GateKind::Toffoli:
        if (state.get(ops[0]) && state.get(ops[1])) {
          state.flip(ops[2]);
        }
        break;
      case GateKind::CSwap:
        if (state.get(ops[0])) {
          bool a = state.get(ops[1]);
          state.set(ops[1], state.get(ops[2]));
          state.set(ops[2], a);
        }
        break;
      case GateKind::MultiControlledX: {
        bool all = true;
        for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
          all = all && state.get(ops[i]);
        }
        if (all) {
          state.flip(ops.back());
        }
        break;
      }
      default:
        throw NonPermutationGate(std::string("gate ") + to_string(g.kind) +
                                 " is not a basis-state permutation");
    }
  }
  return state;
}

std::size_t amp_index_of(const BasisState& state) {
  std::size_t idx = 0;
  for (std::uint32_t q = 0; q < state.width(); ++q) {
    if (state.get(q)) {
      idx |= std::size_t{1} << q;
    }
  }
  return idx;
}

BasisState state_of_amp_index(std::uint32_t width, std::size_t index) {
  BasisState s(width);
  for (std::uint32_t q = 0; q < width; ++q) {
    s.set(q, (index >> q) & 1u);
  }
  return s;
}

std::vector<std::complex<double>> simulate_statevector(
    const LoweredCircuit& circuit, const BasisState& input,
    std::uint32_t max_qubits) {
  if (circuit.qubit_count > max_qubits) {
    throw TooManyQubits("dense statevector limited to " +
                        std::to_string(max_qubits) + " qubits, circuit has " +
                        std::to_string(circuit.qubit_count));
  }
  if (input.width() != circuit.qubit_count) {
    throw Error("input width does not match circuit width");
  }
  const std::size_t n = std::size_t{1} << circuit.qubit_count;
  std::vector<std::complex<double>> amp(n, 0.0);
  amp[amp_index_of(input)] = 1.0;

  const kern::Kernels& k = kern::active_kernels();
  const std::complex<double> kPhaseT{0.7071067811865475244,
                                     0.7071067811865475244};
  const std::complex<double> kPhaseTdg{0.7071067811865475244,
                                       -0.7071067811865475244};
  for (const BasicGate& g : circuit.gates) {
    switch (g.kind) {
      case BasicKind::H:
        k.apply_h(amp.data(), n, g.q0);
        break;
      case BasicKind::S:
        k.apply_phase(amp.data(), n, g.q0, {0.0, 1.0});
        break;
      case BasicKind::Sdg:
        k.apply_phase(amp.data(), n, g.q0, {0.0, -1.0});
        break;
      case BasicKind::T:
        k.apply_phase(amp.data(), n, g.q0, kPhaseT);
        break;
      case BasicKind::Tdg:
        k.apply_phase(amp.data(), n, g.q0, kPhaseTdg);
        break;
      case BasicKind::CNOT:
        k.apply_cnot(amp.data(), n, g.q0, g.q1);
        break;
    }
  }
  return amp;
}

std::vector<ExactAmplitude> simulate_statevector_exact(
    const LoweredCircuit& circuit, const BasisState& input,
    std::uint32_t max_qubits) {
  if (circuit.qubit_count > max_qubits) {
    throw TooManyQubits("exact statevector limited to " +
                        std::to_string(max_qubits) + " qubits, circuit has " +
                        std::to_string(circuit.qubit_count));
  }
  if (input.width() != circuit.qubit_count) {
    throw Error("input width does not match circuit width");
  }
  const std::size_t n = std::size_t{1} << circuit.qubit_count;
  std::vector<ExactAmplitude> amp(n);
  amp[amp_index_of(input)] = ExactAmplitude::one();

  for (const BasicGate& g : circuit.gates) {
    const std::size_t tm = std::size_t{1} << g.q0;
    switch (g.kind) {
      case BasicKind::H:
        for (std::size_t base = 0; base < n; base += 2 * tm) {
          for (std::size_t off = 0; off < tm; ++off) {
            ExactAmplitude u = amp[base + off];
            ExactAmplitude v = amp[base + off + tm];
            amp[base + off] = u.plus(v).div_sqrt2();
            amp[base + off + tm] = u.minus(v).div_sqrt2();
          }
        }
        break;
      case BasicKind::S:
      case BasicKind::Sdg:
      case BasicKind::T:
      case BasicKind::Tdg: {
        int j = g.kind == BasicKind::T     ? 1
                : g.kind == BasicKind::S   ? 2
                : g.kind == BasicKind::Sdg ? 6
                                           : 7;
        for (std::size_t i = 0; i < n; ++i) {
          if ((i & tm) != 0 && !amp[i].is_zero()) {
            amp[i] = amp[i].times_omega(j);
          }
        }
        break;
      }
      case BasicKind::CNOT: {
        const std::size_t cm = std::size_t{1} << g.q0;
        const std::size_t tmask = std::size_t{1} << g.q1;
        for (std::size_t i = 0; i < n; ++i) {
          if ((i & cm) != 0 && (i & tmask) == 0) {
            std::swap(amp[i], amp[i | tmask]);
          }
        }
        break;
      }
    }
  }
  return amp;
}

SparseState simulate_sparse_exact(const LoweredCircuit& circuit,
                                  const BasisState& input,
                                  std::size_t max_support) {
  if (input.width() != circuit.qubit_count) {
    throw Error("input width does not match circuit width");
  }
  SparseState amp;
  amp.emplace(input, ExactAmplitude::one());

  for (const BasicGate& g : circuit.gates) {
    switch (g.kind) {
      case BasicKind::H: {
        SparseState next;
        next.reserve(amp.size() * 2);
        for (const auto& [s, a] : amp) {
          ExactAmplitude half = a.div_sqrt2();
          bool was_one = s.get(g.q0);
          BasisState flipped = s;
          flipped.flip(g.q0);
          {
            // |1> -> (|0> - |1>)/sqrt(2), |0> -> (|0> + |1>)/sqrt(2)
            auto& same = next[s];
            same = was_one ? same.minus(half) : same.plus(half);
          }
          {
            auto& other = next[flipped];
            other = other.plus(half);
          }
        }
        amp.clear();
        for (auto& [s, a] : next) {
          if (!a.is_zero()) {
            amp.emplace(s, a);
          }
        }
        if (amp.size() > max_support) {
          throw TooManyQubits("sparse statevector support exceeded " +
                              std::to_string(max_support));
        }
        break;
      }
      case BasicKind::S:
      case BasicKind::Sdg:
      case BasicKind::T:
      case BasicKind::Tdg: {
        int j = g.kind == BasicKind::T     ? 1
                : g.kind == BasicKind::S   ? 2
                : g.kind == BasicKind::Sdg ? 6
                                           : 7;
        for (auto& [s, a] : amp) {
          if (s.get(g.q0)) {
            a = a.times_omega(j);
          }
        }
        break;
      }
      case BasicKind::CNOT: {
        SparseState next;
        next.reserve(amp.size());
        for (auto& [s, a] : amp) {
          if (s.get(g.q0)) {
            BasisState flipped = s;
            flipped.flip(g.q1);
            next.emplace(std::move(flipped), a);
          } else {
            next.emplace(s, a);
          }
        }
        amp = std::move(next);
        break;
      }
    }
  }
  return amp;
}

}  // namespace qactiv
