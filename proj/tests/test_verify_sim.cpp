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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "qactiv/basis_state.hpp"
#include "qactiv/equiv.hpp"
#include "qactiv/exact_amp.hpp"
#include "qactiv/gates.hpp"
#include "qactiv/lower.hpp"
#include "qactiv/sim.hpp"

namespace qactiv {
namespace {

Circuit make(std::uint32_t qubits, std::vector<Gate> gates) {
  Circuit c;
  c.qubit_count = qubits;
  c.gates = std::move(gates);
  return c;
}

TEST_CASE("basis state string and integer round trips") {
  BasisState s = BasisState::from_string("0101");
  CHECK(s.width() == 4);
  // Position 0 of the string is qubit 0 and the most significant bit.
  CHECK_FALSE(s.get(0));
  CHECK(s.get(1));
  CHECK_FALSE(s.get(2));
  CHECK(s.get(3));
  CHECK(s.to_uint() == 5);
  CHECK(s.str() == "0101");
  CHECK(BasisState::from_uint(4, 5) == s);

  BasisState wide(80);
  wide.set(0, true);
  wide.set(70, true);
  CHECK(wide.get(0));
  CHECK(wide.get(70));
  CHECK_FALSE(wide.get(69));
  CHECK(wide.str().size() == 80);
  wide.set(70, false);
  CHECK_FALSE(wide.get(70));
}

TEST_CASE("exact amplitude ring arithmetic") {
  ExactAmplitude one = ExactAmplitude::one();
  CHECK(one.times_omega(8) == one);
  CHECK(one.times_omega(4) == ExactAmplitude{-1, 0, 0, 0, 0});
  CHECK(one.times_omega(2) == ExactAmplitude{0, 0, 1, 0, 0});
  CHECK(one.plus(one.times_omega(4)).is_zero());

  // (1/sqrt(2))^2 reduces to 1/2 with the canonical denominator.
  ExactAmplitude half = one.div_sqrt2().div_sqrt2();
  std::complex<double> z = half.to_complex();
  CHECK(std::abs(z.real() - 0.5) < 1e-15);
  CHECK(std::abs(z.imag()) < 1e-15);

  // omega + omega^7 = sqrt(2), which the reduction folds into k.
  ExactAmplitude root2 = one.times_omega(1).plus(one.times_omega(7));
  CHECK(std::abs(root2.to_complex().real() - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("H twice is the identity in exact arithmetic") {
  LoweredCircuit lc = lower(make(1, {Gate::h(0), Gate::h(0)}));
  std::vector<ExactAmplitude> amps =
      simulate_statevector_exact(lc, BasisState::from_uint(1, 0));
  CHECK(amps[0] == ExactAmplitude::one());
  CHECK(amps[1].is_zero());
}

Circuit random_clifford_t(std::uint32_t qubits, std::size_t gates,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<QubitId> pick(0, qubits - 1);
  Circuit c;
  c.qubit_count = qubits;
  for (std::size_t i = 0; i < gates; ++i) {
    QubitId q = pick(rng);
    switch (kind(rng)) {
      case 0: c.add(Gate::h(q)); break;
      case 1: c.add(Gate::s(q)); break;
      case 2: c.add(Gate::sdg(q)); break;
      case 3: c.add(Gate::t(q)); break;
      case 4: c.add(Gate::tdg(q)); break;
      default: {
        QubitId t = pick(rng);
        if (t == q) {
          t = (t + 1) % qubits;
        }
        c.add(Gate::cnot(q, t));
        break;
      }
    }
  }
  return c;
}

TEST_CASE("float and exact statevectors agree on random circuits") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Circuit c = random_clifford_t(6, 200, seed);
    LoweredCircuit lc = lower(c);
    BasisState in = BasisState::from_uint(6, 21);
    std::vector<std::complex<double>> fl = simulate_statevector(lc, in);
    std::vector<ExactAmplitude> ex = simulate_statevector_exact(lc, in);
    REQUIRE(fl.size() == ex.size());
    double norm = 0;
    for (std::size_t i = 0; i < fl.size(); ++i) {
      REQUIRE(std::abs(fl[i] - ex[i].to_complex()) < 1e-9);
      norm += std::norm(fl[i]);
    }
    CHECK(std::abs(norm - 1.0) < 1e-9);
  }
}

TEST_CASE("sparse exact simulation matches the dense exact simulation") {
  for (std::uint64_t seed : {7u, 8u}) {
    Circuit c = random_clifford_t(5, 120, seed);
    LoweredCircuit lc = lower(c);
    BasisState in = BasisState::from_uint(5, 9);
    std::vector<ExactAmplitude> dense = simulate_statevector_exact(lc, in);
    SparseState sparse = simulate_sparse_exact(lc, in);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i].is_zero()) {
        continue;
      }
      ++nonzero;
      BasisState key = state_of_amp_index(5, i);
      auto it = sparse.find(key);
      REQUIRE(it != sparse.end());
      REQUIRE(it->second == dense[i]);
    }
    CHECK(sparse.size() == nonzero);
  }
}

TEST_CASE("amplitude indexing convention round trips") {
  for (std::uint32_t w : {1u, 3u, 6u}) {
    for (std::size_t i = 0; i < (std::size_t{1} << w); ++i) {
      CHECK(amp_index_of(state_of_amp_index(w, i)) == i);
    }
  }
}

TEST_CASE("macro simulation truth tables") {
  Circuit c = make(3, {Gate::toffoli(0, 1, 2)});
  CHECK(is_permutation_circuit(c));
  CHECK(simulate_macro(c, BasisState::from_string("110")) ==
        BasisState::from_string("111"));
  CHECK(simulate_macro(c, BasisState::from_string("100")) ==
        BasisState::from_string("100"));

  c = make(3, {Gate::cswap(0, 1, 2)});
  CHECK(simulate_macro(c, BasisState::from_string("110")) ==
        BasisState::from_string("101"));
  CHECK(simulate_macro(c, BasisState::from_string("010")) ==
        BasisState::from_string("010"));

  c = make(2, {Gate::swap(0, 1)});
  CHECK(simulate_macro(c, BasisState::from_string("10")) ==
        BasisState::from_string("01"));

  c = make(5, {Gate::multi_controlled_x({0, 1, 2, 3}, 4)});
  CHECK(simulate_macro(c, BasisState::from_string("11110")) ==
        BasisState::from_string("11111"));
  CHECK(simulate_macro(c, BasisState::from_string("11010")) ==
        BasisState::from_string("11010"));

  CHECK_FALSE(is_permutation_circuit(make(1, {Gate::h(0)})));
  CHECK_THROWS_AS(simulate_macro(make(1, {Gate::h(0)}), BasisState(1)),
                  NonPermutationGate);
}

TEST_CASE("unitary equivalence accepts equal circuits and reports phase") {
  // S then S is Z, which is the fourth power of T.
  EquivResult r = check_unitary_equiv(make(1, {Gate::s(0), Gate::s(0)}),
                                      make(1, {Gate::phase_power(0, 4)}));
  CHECK(r.equal);
  CHECK(r.phase_exponent == 0);

  // X Z X Z = -I: equal to the empty circuit up to the global phase -1.
  Circuit xzxz = make(1, {Gate::x(0), Gate::phase_power(0, 4), Gate::x(0),
                          Gate::phase_power(0, 4)});
  r = check_unitary_equiv(xzxz, make(1, {}));
  CHECK(r.equal);
  CHECK(r.phase_exponent == 4);
}

TEST_CASE("unitary equivalence rejects different circuits") {
  CHECK_FALSE(check_unitary_equiv(make(1, {Gate::x(0)}),
                                  make(1, {Gate::h(0)}))
                  .equal);
  CHECK_FALSE(check_unitary_equiv(make(2, {Gate::cnot(0, 1)}),
                                  make(2, {Gate::cnot(1, 0)}))
                  .equal);
  // T and S differ only in one phase entry; still not equal as unitaries.
  CHECK_FALSE(
      check_unitary_equiv(make(1, {Gate::t(0)}), make(1, {Gate::s(0)})).equal);
}

TEST_CASE("unitary equivalence rejects oversized inputs") {
  Circuit wide = make(11, {Gate::h(0)});
  CHECK_THROWS_AS(check_unitary_equiv(wide, wide), TooManyQubits);
}

TEST_CASE("functional verification checks outputs, inputs, and ancillas") {
  // CNOT copies input to output: the identity map on one bit.
  Circuit c = make(2, {Gate::cnot(0, 1)});
  FunctionalSpec spec;
  spec.input_qubits = {0};
  spec.output_qubits = {1};
  spec.oracle = [](const BasisState& in) { return in; };
  FunctionalReport rep = verify_functional(c, spec);
  CHECK(rep.ok);
  CHECK(rep.exhaustive);
  CHECK(rep.checked == 2);

  // A wrong oracle must be caught.
  spec.oracle = [](const BasisState& in) {
    BasisState out(1);
    out.set(0, !in.get(0));
    return out;
  };
  CHECK_FALSE(verify_functional(c, spec).ok);

  // Destroying the input register must be caught.
  Circuit burn = make(2, {Gate::x(0)});
  FunctionalSpec keep;
  keep.input_qubits = {0};
  keep.output_qubits = {};
  keep.oracle = [](const BasisState&) { return BasisState(0); };
  CHECK_FALSE(verify_functional(burn, keep).ok);

  // Leaving garbage on a must-stay-zero qubit must be caught.
  Circuit dirty = make(2, {Gate::x(1)});
  FunctionalSpec clean;
  clean.input_qubits = {0};
  clean.output_qubits = {};
  clean.oracle = [](const BasisState&) { return BasisState(0); };
  clean.must_stay_zero = {1};
  CHECK_FALSE(verify_functional(dirty, clean).ok);
}

TEST_CASE("functional verification samples wide circuits deterministically") {
  // 24 input bits exceeds the exhaustive limit; sampling kicks in.
  std::uint32_t qc = 25;
  Circuit c;
  c.qubit_count = qc;
  for (QubitId q = 0; q < 24; ++q) {
    c.add(Gate::cnot(q, 24));
  }
  FunctionalSpec spec;
  for (QubitId q = 0; q < 24; ++q) {
    spec.input_qubits.push_back(q);
  }
  spec.output_qubits = {24};
  spec.samples = 256;
  spec.oracle = [](const BasisState& in) {
    bool parity = false;
    for (std::uint32_t q = 0; q < in.width(); ++q) {
      parity ^= in.get(q);
    }
    BasisState out(1);
    out.set(0, parity);
    return out;
  };
  FunctionalReport rep = verify_functional(c, spec);
  CHECK(rep.ok);
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.checked == 256);
}

}  // namespace
}  // namespace qactiv
