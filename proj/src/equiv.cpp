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

#include "qactiv/equiv.hpp"

#include <random>
#include <sstream>

#include "qactiv/lower.hpp"
#include "qactiv/sim.hpp"

namespace qactiv {

namespace {

// One unitary column as a sparse-enough dense vector of exact amplitudes.
std::vector<ExactAmplitude> column_of(const Circuit& circuit, bool permutation,
                                      const LoweredCircuit& lowered,
                                      std::size_t col,
                                      std::uint32_t max_qubits) {
  if (permutation) {
    BasisState in = state_of_amp_index(circuit.qubit_count, col);
    BasisState out = simulate_macro(circuit, in);
    std::vector<ExactAmplitude> v(std::size_t{1} << circuit.qubit_count);
    v[amp_index_of(out)] = ExactAmplitude::one();
    return v;
  }
  BasisState in = state_of_amp_index(circuit.qubit_count, col);
  return simulate_statevector_exact(lowered, in, max_qubits);
}

}  // namespace

EquivResult check_unitary_equiv(const Circuit& a, const Circuit& b,
                                std::uint32_t max_qubits) {
  EquivResult res;
  if (a.qubit_count != b.qubit_count) {
    res.detail = "qubit counts differ (" + std::to_string(a.qubit_count) +
                 " vs " + std::to_string(b.qubit_count) + ")";
    return res;
  }
  if (a.qubit_count > max_qubits) {
    throw TooManyQubits("unitary comparison limited to " +
                        std::to_string(max_qubits) + " qubits");
  }
  validate(a);
  validate(b);

  bool perm_a = is_permutation_circuit(a);
  bool perm_b = is_permutation_circuit(b);
  LoweredCircuit low_a = perm_a ? LoweredCircuit{} : lower(a);
  LoweredCircuit low_b = perm_b ? LoweredCircuit{} : lower(b);

  const std::size_t dim = std::size_t{1} << a.qubit_count;
  int phase = -1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<ExactAmplitude> ca =
        column_of(a, perm_a, low_a, col, max_qubits);
    std::vector<ExactAmplitude> cb =
        column_of(b, perm_b, low_b, col, max_qubits);
    for (std::size_t row = 0; row < dim; ++row) {
      if (ca[row].is_zero() != cb[row].is_zero()) {
        std::ostringstream os;
        os << "support differs at column " << col << " row " << row;
        res.detail = os.str();
        return res;
      }
      if (ca[row].is_zero()) {
        continue;
      }
      if (phase < 0) {
        for (int j = 0; j < 8; ++j) {
          if (cb[row].times_omega(j) == ca[row]) {
            phase = j;
            break;
          }
        }
        if (phase < 0) {
          std::ostringstream os;
          os << "amplitude ratio at column " << col << " row " << row
             << " is not an eighth root of unity";
          res.detail = os.str();
          return res;
        }
      }
      if (cb[row].times_omega(phase) != ca[row]) {
        std::ostringstream os;
        os << "amplitudes differ at column " << col << " row " << row;
        res.detail = os.str();
        return res;
      }
    }
  }
  res.equal = true;
  res.phase_exponent = phase < 0 ? 0 : phase;
  res.detail = "equal";
  return res;
}

FunctionalReport verify_functional(const Circuit& circuit,
                                   const FunctionalSpec& spec) {
  FunctionalReport report;
  validate(circuit);
  bool permutation = is_permutation_circuit(circuit);
  LoweredCircuit lowered;
  if (!permutation) {
    lowered = lower(circuit);
  }

  const std::uint32_t in_bits =
      static_cast<std::uint32_t>(spec.input_qubits.size());
  bool exhaustive = in_bits <= spec.exhaustive_limit;
  std::uint64_t total =
      exhaustive ? (std::uint64_t{1} << in_bits) : spec.samples;
  report.exhaustive = exhaustive;

  std::mt19937_64 rng(spec.seed);
  for (std::uint64_t iter = 0; iter < total; ++iter) {
    std::uint64_t assignment = exhaustive ? iter : rng();

    BasisState in_reg(in_bits);
    for (std::uint32_t i = 0; i < in_bits; ++i) {
      in_reg.set(i, (assignment >> (in_bits - 1 - i)) & 1u);
    }
    BasisState full(circuit.qubit_count);
    for (std::uint32_t i = 0; i < in_bits; ++i) {
      full.set(spec.input_qubits[i], in_reg.get(i));
    }

    BasisState result(circuit.qubit_count);
    if (permutation) {
      result = simulate_macro(circuit, full);
    } else {
      SparseState state = simulate_sparse_exact(lowered, full);
      if (state.size() != 1) {
        report.detail = "input " + in_reg.str() +
                        " produced a superposition of " +
                        std::to_string(state.size()) + " basis states";
        return report;
      }
      const auto& [s, amp] = *state.begin();
      if (!(amp == ExactAmplitude::one())) {
        report.detail = "input " + in_reg.str() +
                        " produced a basis state with amplitude != 1";
        return report;
      }
      result = s;
    }

    BasisState expect = spec.oracle(in_reg);
    if (expect.width() != spec.output_qubits.size()) {
      throw Error("oracle width does not match output register");
    }
    for (std::size_t i = 0; i < spec.output_qubits.size(); ++i) {
      if (result.get(spec.output_qubits[i]) != expect.get(
              static_cast<QubitId>(i))) {
        report.detail = "input " + in_reg.str() + ": output qubit " +
                        std::to_string(spec.output_qubits[i]) +
                        " disagrees with the reference";
        return report;
      }
    }
    if (spec.require_inputs_preserved) {
      for (std::uint32_t i = 0; i < in_bits; ++i) {
        if (result.get(spec.input_qubits[i]) != in_reg.get(i)) {
          report.detail = "input " + in_reg.str() + ": input qubit " +
                          std::to_string(spec.input_qubits[i]) +
                          " was not preserved";
          return report;
        }
      }
    }
    for (QubitId q : spec.must_stay_zero) {
      if (result.get(q)) {
        report.detail = "input " + in_reg.str() + ": qubit " +
                        std::to_string(q) + " should have returned to 0";
        return report;
      }
    }
    ++report.checked;
  }
  report.ok = true;
  report.detail = "ok";
  return report;
}

}  // namespace qactiv
