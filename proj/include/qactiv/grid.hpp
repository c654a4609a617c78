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

#pragma once

#include <cstdint>
#include <vector>

#include "qactiv/gates.hpp"

namespace qactiv {

struct GridCoord {
  std::uint32_t row = 0;
  std::uint32_t col = 0;

  bool operator==(const GridCoord& o) const {
    return row == o.row && col == o.col;
  }
};

// Square grid of side k (k even) holding an n-bit ReLU, n <= k*k/2. Input
// bit i sits in an even column next to its output partner in the following
// odd column; every cell is materialized as a qubit so unused cells can be
// routed through.
//
// Qubit ids: 0..n-1 inputs, n..2n-2 outputs, the rest unused filler.
class GridLayout {
 public:
  static GridLayout for_relu(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  std::uint32_t side() const { return side_; }
  std::uint32_t qubit_count() const { return side_ * side_; }

  GridCoord cell_of(QubitId q) const { return cell_of_[q]; }
  QubitId qubit_at(std::uint32_t row, std::uint32_t col) const {
    return qubit_at_[row * side_ + col];
  }

  bool adjacent(QubitId a, QubitId b) const;

  QubitId input_qubit(std::uint32_t i) const { return i; }         // i in [0, n)
  QubitId output_qubit(std::uint32_t i) const { return n_ - 1 + i; }  // i in [1, n)

  std::vector<QubitRole> roles() const;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t side_ = 0;
  std::vector<GridCoord> cell_of_;
  std::vector<QubitId> qubit_at_;
};

// CNOT between any two cells, walking columns then rows. The value relays
// through the in-between cells with a CNOT ladder that restores them, so
// arbitrary data may sit on the path. All emitted CNOTs act on grid-adjacent
// pairs; a distance-d pair costs 4d - 4 gates (one CNOT when adjacent).
std::vector<Gate> route_long_cnot(const GridLayout& layout, QubitId control,
                                  QubitId target);

// Cheaper routed CNOT for use inside mirrored (compute/uncompute) sections:
// nets target ^= parity of every cell on the path instead of just the
// control, at 2d - 1 gates for a distance-d pair. The surrounding mirror
// cancels the extra parity terms, so the composite still fans out cleanly.
std::vector<Gate> route_relay_cnot(const GridLayout& layout, QubitId control,
                                   QubitId target);

// Fan-out of `source` into all targets using only grid-adjacent CNOTs,
// recursing over the target bounding box so the depth scales with the grid
// side rather than the target count.
Circuit build_grid_fanout(const GridLayout& layout, QubitId source,
                          const std::vector<QubitId>& targets);

// ReLU built directly on the grid: every two-qubit interaction is
// grid-adjacent and the lowered T-depth stays 4.
Circuit build_relu_grid(std::uint32_t n);

struct ConnectivityViolation {
  std::size_t gate_index = 0;
  QubitId a = 0;
  QubitId b = 0;
};

// Every pair of operands of every gate must be grid-adjacent (macro gates
// with three or more operands therefore always violate).
std::vector<ConnectivityViolation> validate_connectivity(
    const GridLayout& layout, const Circuit& circuit);

}  // namespace qactiv
