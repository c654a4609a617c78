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

#include "qactiv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "emit.hpp"

namespace qactiv {

GridLayout GridLayout::for_relu(std::uint32_t n) {
  if (n < 2) {
    throw WidthTooSmall("grid ReLU needs at least 2 bits, got " +
                        std::to_string(n));
  }
  std::uint32_t k = 2;
  while (k * k / 2 < n) {
    k += 2;
  }
  GridLayout g;
  g.n_ = n;
  g.side_ = k;
  g.cell_of_.assign(k * k, GridCoord{});
  g.qubit_at_.assign(k * k, 0);

  std::vector<bool> taken(k * k, false);
  auto place = [&](QubitId q, std::uint32_t row, std::uint32_t col) {
    g.cell_of_[q] = {row, col};
    g.qubit_at_[row * k + col] = q;
    taken[row * k + col] = true;
  };
  // Input bit i fills even column 2*(i/k), top to bottom; its output partner
  // sits immediately to the right.
  for (std::uint32_t i = 0; i < n; ++i) {
    place(i, i % k, 2 * (i / k));
  }
  for (std::uint32_t i = 1; i < n; ++i) {
    place(n - 1 + i, i % k, 2 * (i / k) + 1);
  }
  QubitId next = 2 * n - 1;
  for (std::uint32_t cell = 0; cell < k * k; ++cell) {
    if (!taken[cell]) {
      place(next++, cell / k, cell % k);
    }
  }
  return g;
}

bool GridLayout::adjacent(QubitId a, QubitId b) const {
  GridCoord ca = cell_of_[a];
  GridCoord cb = cell_of_[b];
  std::uint32_t dr = ca.row > cb.row ? ca.row - cb.row : cb.row - ca.row;
  std::uint32_t dc = ca.col > cb.col ? ca.col - cb.col : cb.col - ca.col;
  return dr + dc == 1;
}

std::vector<QubitRole> GridLayout::roles() const {
  std::vector<QubitRole> roles(qubit_count(), QubitRole::Unused);
  for (std::uint32_t i = 0; i < n_; ++i) {
    roles[i] = QubitRole::Input;
  }
  for (std::uint32_t i = 1; i < n_; ++i) {
    roles[n_ - 1 + i] = QubitRole::Output;
  }
  return roles;
}

namespace {

// Grid cells from control to target, walking columns then rows.
std::vector<QubitId> grid_path(const GridLayout& layout, QubitId control,
                               QubitId target) {
  GridCoord src = layout.cell_of(control);
  GridCoord dst = layout.cell_of(target);
  if (src == dst) {
    throw DuplicateOperand("route endpoints coincide");
  }
  std::vector<QubitId> path{control};
  GridCoord cur = src;
  while (cur.col != dst.col) {
    cur.col += cur.col < dst.col ? 1 : -1;
    path.push_back(layout.qubit_at(cur.row, cur.col));
  }
  while (cur.row != dst.row) {
    cur.row += cur.row < dst.row ? 1 : -1;
    path.push_back(layout.qubit_at(cur.row, cur.col));
  }
  return path;
}

}  // namespace

std::vector<Gate> route_long_cnot(const GridLayout& layout, QubitId control,
                                  QubitId target) {
  std::vector<QubitId> path = grid_path(layout, control, target);
  std::vector<Gate> gates;
  const std::size_t m = path.size() - 1;  // hop count
  if (m == 1) {
    gates.push_back(Gate::cnot(control, target));
    return gates;
  }
  // CNOT ladder through the dirty intermediates: descend, ascend, then the
  // same pair with the outermost rung dropped. Nets target ^= control and
  // restores every cell in between.
  for (std::size_t i = m; i-- > 0;) {
    gates.push_back(Gate::cnot(path[i], path[i + 1]));
  }
  for (std::size_t i = 1; i < m; ++i) {
    gates.push_back(Gate::cnot(path[i], path[i + 1]));
  }
  for (std::size_t i = m - 1; i-- > 0;) {
    gates.push_back(Gate::cnot(path[i], path[i + 1]));
  }
  for (std::size_t i = 1; i + 1 < m; ++i) {
    gates.push_back(Gate::cnot(path[i], path[i + 1]));
  }
  return gates;
}

std::vector<Gate> route_relay_cnot(const GridLayout& layout, QubitId control,
                                   QubitId target) {
  std::vector<QubitId> path = grid_path(layout, control, target);
  std::vector<Gate> gates;
  const std::size_t m = path.size() - 1;
  // Ascending ladder followed by a descending sweep over the interior rungs.
  // Nets target ^= parity of the whole path and restores the intermediates,
  // which is enough for edges that are mirrored later in the same circuit.
  for (std::size_t i = 0; i < m; ++i) {
    gates.push_back(Gate::cnot(path[i], path[i + 1]));
  }
  for (std::size_t i = m - 1; i-- > 0;) {
    gates.push_back(Gate::cnot(path[i], path[i + 1]));
  }
  return gates;
}

namespace {

struct Cell {
  GridCoord coord;
  QubitId qubit;
};

bool col_major_less(const Cell& a, const Cell& b) {
  if (a.coord.col != b.coord.col) {
    return a.coord.col < b.coord.col;
  }
  return a.coord.row < b.coord.row;
}

// Binary split of the bounding box, columns before rows, representative =
// col-major-first cell. Equal-stage edges lie in disjoint boxes and may run
// concurrently.
void grid_tree_rec(std::vector<Cell>& cells, std::size_t lo, std::size_t hi,
                   std::uint32_t stage, detail::FanoutPlan& plan) {
  if (hi - lo <= 1) {
    return;
  }
  std::uint32_t cmin = ~0u, cmax = 0, rmin = ~0u, rmax = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    cmin = std::min(cmin, cells[i].coord.col);
    cmax = std::max(cmax, cells[i].coord.col);
    rmin = std::min(rmin, cells[i].coord.row);
    rmax = std::max(rmax, cells[i].coord.row);
  }
  auto left_of = [&](const Cell& c) {
    if (cmin < cmax) {
      return c.coord.col < cmin + (cmax - cmin + 1) / 2;
    }
    return c.coord.row < rmin + (rmax - rmin + 1) / 2;
  };
  auto mid_it = std::stable_partition(
      cells.begin() + static_cast<std::ptrdiff_t>(lo),
      cells.begin() + static_cast<std::ptrdiff_t>(hi), left_of);
  std::size_t mid = static_cast<std::size_t>(mid_it - cells.begin());

  const Cell* rep_left = &cells[lo];
  const Cell* rep_right = &cells[mid];
  for (std::size_t i = lo; i < mid; ++i) {
    if (col_major_less(cells[i], *rep_left)) {
      rep_left = &cells[i];
    }
  }
  for (std::size_t i = mid; i < hi; ++i) {
    if (col_major_less(cells[i], *rep_right)) {
      rep_right = &cells[i];
    }
  }
  plan.edges.push_back({rep_left->qubit, rep_right->qubit, stage});
  plan.stage_count = std::max(plan.stage_count, stage + 1);
  grid_tree_rec(cells, lo, mid, stage + 1, plan);
  grid_tree_rec(cells, mid, hi, stage + 1, plan);
}

detail::FanoutPlan plan_grid_fanout(const GridLayout& layout,
                                    const std::vector<QubitId>& targets) {
  detail::FanoutPlan plan;
  if (targets.empty()) {
    return plan;
  }
  std::vector<Cell> cells;
  cells.reserve(targets.size());
  for (QubitId q : targets) {
    cells.push_back({layout.cell_of(q), q});
  }
  const Cell* root = &cells[0];
  for (const Cell& c : cells) {
    if (col_major_less(c, *root)) {
      root = &c;
    }
  }
  plan.root = root->qubit;
  grid_tree_rec(cells, 0, cells.size(), 0, plan);
  return plan;
}

void emit_grid_fanout(const GridLayout& layout, detail::NetSink& sink,
                      QubitId source, const std::vector<QubitId>& targets) {
  if (targets.empty()) {
    return;
  }
  detail::FanoutPlan plan = plan_grid_fanout(layout, targets);
  auto route = [&layout](QubitId s, QubitId d) {
    return route_relay_cnot(layout, s, d);
  };
  detail::emit_mirrored_fanout(sink, plan, route, [&] {
    for (const Gate& g : route_long_cnot(layout, source, plan.root)) {
      sink.emit(g);
    }
  });
}

}  // namespace

Circuit build_grid_fanout(const GridLayout& layout, QubitId source,
                          const std::vector<QubitId>& targets) {
  if (targets.empty()) {
    throw EmptyTargets("fan-out needs at least one target");
  }
  std::vector<QubitId> all(targets);
  all.push_back(source);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw OverlappingPairs("fan-out source and targets share a qubit");
  }
  Circuit c;
  c.qubit_count = layout.qubit_count();
  detail::CircuitSink cs(c);
  detail::NetSink sink = cs.sink();
  emit_grid_fanout(layout, sink, source, targets);
  validate(c);
  return c;
}

Circuit build_relu_grid(std::uint32_t n) {
  GridLayout layout = GridLayout::for_relu(n);
  Circuit c;
  c.qubit_count = layout.qubit_count();
  c.roles = layout.roles();

  detail::CircuitSink cs(c);
  detail::NetSink sink = cs.sink();

  std::vector<ToffoliPair> pairs;
  pairs.reserve(n - 1);
  for (std::uint32_t i = 1; i < n; ++i) {
    pairs.push_back({layout.input_qubit(i), layout.output_qubit(i)});
  }
  auto fanout = [&layout](detail::NetSink& s, QubitId src,
                          const std::vector<QubitId>& targets) {
    emit_grid_fanout(layout, s, src, targets);
  };

  sink.emit(Gate::x(0));
  detail::emit_shared_control_batch(sink, 0, pairs, fanout);
  sink.emit(Gate::x(0));
  validate(c);
  return c;
}

std::vector<ConnectivityViolation> validate_connectivity(
    const GridLayout& layout, const Circuit& circuit) {
  std::vector<ConnectivityViolation> out;
  for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi) {
    const auto& ops = circuit.gates[gi].operands;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        if (!layout.adjacent(ops[i], ops[j])) {
          out.push_back({gi, ops[i], ops[j]});
        }
      }
    }
  }
  return out;
}

}  // namespace qactiv
