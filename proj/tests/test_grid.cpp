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
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "qactiv/basis_state.hpp"
#include "qactiv/equiv.hpp"
#include "qactiv/gates.hpp"
#include "qactiv/grid.hpp"
#include "qactiv/lower.hpp"
#include "qactiv/relu.hpp"
#include "qactiv/schedule.hpp"
#include "qactiv/sim.hpp"

namespace qactiv {
namespace {

std::uint32_t manhattan(const GridLayout& g, QubitId a, QubitId b) {
  GridCoord ca = g.cell_of(a);
  GridCoord cb = g.cell_of(b);
  auto diff = [](std::uint32_t x, std::uint32_t y) {
    return x > y ? x - y : y - x;
  };
  return diff(ca.row, cb.row) + diff(ca.col, cb.col);
}

TEST_CASE("grid layout placement for n = 8") {
  GridLayout g = GridLayout::for_relu(8);
  CHECK(g.side() == 4);
  CHECK(g.qubit_count() == 16);
  // Inputs fill even columns top to bottom, outputs sit one column right.
  CHECK(g.cell_of(0) == GridCoord{0, 0});
  CHECK(g.cell_of(3) == GridCoord{3, 0});
  CHECK(g.cell_of(4) == GridCoord{0, 2});
  CHECK(g.cell_of(7) == GridCoord{3, 2});
  CHECK(g.cell_of(g.output_qubit(1)) == GridCoord{1, 1});
  CHECK(g.cell_of(g.output_qubit(4)) == GridCoord{0, 3});
  // The one leftover cell hosts the filler qubit.
  CHECK(g.cell_of(15) == GridCoord{0, 1});
  // Roles: 8 inputs, 7 outputs, 1 unused.
  std::vector<QubitRole> roles = g.roles();
  std::size_t in = 0, out = 0, unused = 0;
  for (QubitRole r : roles) {
    in += r == QubitRole::Input;
    out += r == QubitRole::Output;
    unused += r == QubitRole::Unused;
  }
  CHECK(in == 8);
  CHECK(out == 7);
  CHECK(unused == 1);
  CHECK(roles[15] == QubitRole::Unused);
}

TEST_CASE("grid side is the smallest even square with room") {
  CHECK(GridLayout::for_relu(2).side() == 2);
  CHECK(GridLayout::for_relu(8).side() == 4);
  CHECK(GridLayout::for_relu(9).side() == 6);
  CHECK(GridLayout::for_relu(18).side() == 6);
  CHECK(GridLayout::for_relu(19).side() == 8);
  CHECK(GridLayout::for_relu(32).side() == 8);
  CHECK(GridLayout::for_relu(512).side() == 32);
}

TEST_CASE("adjacency is Manhattan distance one") {
  GridLayout g = GridLayout::for_relu(8);
  for (QubitId a = 0; a < g.qubit_count(); ++a) {
    for (QubitId b = 0; b < g.qubit_count(); ++b) {
      CHECK(g.adjacent(a, b) == (manhattan(g, a, b) == 1));
    }
  }
}

TEST_CASE("routed CNOT gate counts") {
  GridLayout g = GridLayout::for_relu(8);
  for (QubitId a = 0; a < g.qubit_count(); ++a) {
    for (QubitId b = 0; b < g.qubit_count(); ++b) {
      if (a == b) {
        continue;
      }
      std::uint32_t d = manhattan(g, a, b);
      CHECK(route_long_cnot(g, a, b).size() ==
            (d == 1 ? 1 : 4 * std::size_t{d} - 4));
      CHECK(route_relay_cnot(g, a, b).size() == 2 * std::size_t{d} - 1);
    }
  }
}

TEST_CASE("routed CNOT nets target ^= control and restores the path") {
  GridLayout g = GridLayout::for_relu(8);
  std::uint32_t qc = g.qubit_count();
  // A long route: corner to corner, distance 6.
  QubitId ctl = g.qubit_at(0, 0);
  QubitId tgt = g.qubit_at(3, 3);
  Circuit c;
  c.qubit_count = qc;
  for (const Gate& gt : route_long_cnot(g, ctl, tgt)) {
    c.add(gt);
  }
  CHECK(validate_connectivity(g, c).empty());
  for (std::uint64_t x = 0; x < (1ull << qc); ++x) {
    BasisState in = BasisState::from_uint(qc, x);
    BasisState want = in;
    want.set(tgt, in.get(tgt) ^ in.get(ctl));
    REQUIRE(simulate_macro(c, in) == want);
  }
}

void check_grid_fanout(const GridLayout& g, QubitId source,
                       const std::vector<QubitId>& targets) {
  Circuit c = build_grid_fanout(g, source, targets);
  CHECK(validate_connectivity(g, c).empty());
  std::uint32_t qc = g.qubit_count();
  for (std::uint64_t x = 0; x < (1ull << qc); ++x) {
    BasisState in = BasisState::from_uint(qc, x);
    BasisState want = in;
    if (in.get(source)) {
      for (QubitId t : targets) {
        want.set(t, !in.get(t));
      }
    }
    REQUIRE(simulate_macro(c, in) == want);
  }
}

TEST_CASE("grid fan-out XORs the source into exactly the targets") {
  GridLayout g = GridLayout::for_relu(8);
  std::vector<QubitId> outputs;
  for (std::uint32_t i = 1; i < 8; ++i) {
    outputs.push_back(g.output_qubit(i));
  }
  check_grid_fanout(g, g.input_qubit(0), outputs);

  std::vector<QubitId> inputs;
  for (std::uint32_t i = 1; i < 8; ++i) {
    inputs.push_back(g.input_qubit(i));
  }
  check_grid_fanout(g, g.output_qubit(1), inputs);

  check_grid_fanout(g, g.input_qubit(2),
                    {g.output_qubit(1), g.output_qubit(4), g.input_qubit(6)});
  check_grid_fanout(g, g.input_qubit(5), {g.output_qubit(5)});
}

TEST_CASE("grid fan-out validation") {
  GridLayout g = GridLayout::for_relu(8);
  CHECK_THROWS_AS(build_grid_fanout(g, 0, {}), EmptyTargets);
  CHECK_THROWS_AS(build_grid_fanout(g, 0, {0}), OverlappingPairs);
  CHECK_THROWS_AS(build_grid_fanout(g, 0, {8, 8}), OverlappingPairs);
}

TEST_CASE("grid relu uses only grid-adjacent gates") {
  for (std::uint32_t n : {8u, 32u}) {
    GridLayout g = GridLayout::for_relu(n);
    Circuit c = build_relu_grid(n);
    CHECK(validate_connectivity(g, c).empty());
  }
}

TEST_CASE("grid relu matches the relu oracle exhaustively at n = 8") {
  std::uint32_t n = 8;
  GridLayout g = GridLayout::for_relu(n);
  Circuit c = build_relu_grid(n);
  FunctionalSpec spec;
  for (std::uint32_t i = 0; i < n; ++i) {
    spec.input_qubits.push_back(g.input_qubit(i));
  }
  for (std::uint32_t i = 1; i < n; ++i) {
    spec.output_qubits.push_back(g.output_qubit(i));
  }
  spec.must_stay_zero.push_back(15);  // the filler cell
  spec.oracle = relu_reference;
  FunctionalReport rep = verify_functional(c, spec);
  CHECK(rep.ok);
  CHECK(rep.exhaustive);
  CHECK(rep.checked == 256);
}

TEST_CASE("grid relu stays correct at a non-square-friendly width") {
  std::uint32_t n = 9;
  GridLayout g = GridLayout::for_relu(n);
  Circuit c = build_relu_grid(n);
  CHECK(validate_connectivity(g, c).empty());
  CHECK(compute_metrics(lower(c)).t_depth == 4);
  FunctionalSpec spec;
  for (std::uint32_t i = 0; i < n; ++i) {
    spec.input_qubits.push_back(g.input_qubit(i));
  }
  for (std::uint32_t i = 1; i < n; ++i) {
    spec.output_qubits.push_back(g.output_qubit(i));
  }
  std::vector<QubitRole> roles = g.roles();
  for (QubitId q = 0; q < g.qubit_count(); ++q) {
    if (roles[q] == QubitRole::Unused) {
      spec.must_stay_zero.push_back(q);
    }
  }
  spec.oracle = relu_reference;
  FunctionalReport rep = verify_functional(c, spec);
  CHECK(rep.ok);
  CHECK(rep.exhaustive);
}

TEST_CASE("grid relu depth and size across sizes") {
  struct Row {
    std::uint32_t n;
    std::uint64_t depth;
    std::uint64_t size;
    std::uint32_t qubits;
  };
  const Row rows[] = {
      {8, 86, 188, 16},
      {32, 214, 972, 64},
      {128, 470, 4748, 256},
      {512, 982, 22540, 1024},
  };
  for (const Row& r : rows) {
    Circuit c = build_relu_grid(r.n);
    CHECK(c.qubit_count == r.qubits);
    Metrics m = compute_metrics(lower(c));
    CHECK(m.depth == r.depth);
    CHECK(m.size == r.size);
    CHECK(m.t_depth == 4);
  }
}

}  // namespace
}  // namespace qactiv
