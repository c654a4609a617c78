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

#include <cstdint>
#include <vector>

#include "doctest.h"
#include "qactiv/basis_state.hpp"
#include "qactiv/equiv.hpp"
#include "qactiv/gates.hpp"
#include "qactiv/lower.hpp"
#include "qactiv/relu.hpp"
#include "qactiv/schedule.hpp"

namespace qactiv {
namespace {

FunctionalSpec relu_spec(std::uint32_t n) {
  FunctionalSpec spec;
  for (std::uint32_t i = 0; i < n; ++i) {
    spec.input_qubits.push_back(i);
  }
  for (std::uint32_t i = 1; i < n; ++i) {
    spec.output_qubits.push_back(n - 1 + i);
  }
  spec.oracle = relu_reference;
  return spec;
}

TEST_CASE("relu circuit shape") {
  Circuit c = build_relu(8);
  CHECK(c.qubit_count == 15);
  // X-conjugated batch: X, one Toffoli batch expansion, X.
  CHECK(c.gates.front().kind == GateKind::X);
  CHECK(c.gates.back().kind == GateKind::X);
  CHECK(c.gates.front().operands[0] == 0);
  CHECK(c.roles.size() == 15);
  CHECK(c.roles[0] == QubitRole::Input);
  CHECK(c.roles[7] == QubitRole::Input);
  CHECK(c.roles[8] == QubitRole::Output);
  CHECK(c.roles[14] == QubitRole::Output);
}

TEST_CASE("relu reference oracle on hand-worked cases") {
  // Sign 0: the magnitude is copied.
  CHECK(relu_reference(BasisState::from_string("0101")) ==
        BasisState::from_string("101"));
  // Sign 1: the output stays zero.
  CHECK(relu_reference(BasisState::from_string("1101")) ==
        BasisState::from_string("000"));
  CHECK(relu_reference(BasisState::from_string("0000")) ==
        BasisState::from_string("000"));
}

TEST_CASE("relu is exhaustively correct up to n = 10") {
  for (std::uint32_t n : {2u, 3u, 5u, 8u, 10u}) {
    Circuit c = build_relu(n);
    FunctionalReport rep = verify_functional(c, relu_spec(n));
    CHECK(rep.ok);
    CHECK(rep.exhaustive);
    CHECK(rep.checked == (1ull << n));
  }
}

TEST_CASE("relu T-depth is 4 for every width") {
  for (std::uint32_t n = 2; n <= 16; ++n) {
    Metrics m = compute_metrics(lower(build_relu(n)));
    CHECK(m.t_depth == 4);
  }
}

TEST_CASE("relu depth and size across widths") {
  struct Row {
    std::uint32_t n;
    std::uint64_t depth;
    std::uint64_t size;
  };
  const Row rows[] = {
      {4, 32, 60}, {8, 42, 134}, {16, 50, 278}, {32, 58, 566}, {64, 66, 1142},
  };
  for (const Row& r : rows) {
    Metrics m = compute_metrics(lower(build_relu(r.n)));
    CHECK(m.depth == r.depth);
    CHECK(m.size == r.size);
  }
}

TEST_CASE("relu rejects degenerate widths") {
  CHECK_THROWS_AS(build_relu(0), WidthTooSmall);
  CHECK_THROWS_AS(build_relu(1), WidthTooSmall);
}

}  // namespace
}  // namespace qactiv
