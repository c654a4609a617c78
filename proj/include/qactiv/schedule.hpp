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
#include <limits>
#include <vector>

#include "qactiv/gates.hpp"

namespace qactiv {

enum class BasicKind : std::uint8_t { H, S, Sdg, T, Tdg, CNOT };

const char* to_string(BasicKind kind);

struct BasicGate {
  BasicKind kind;
  QubitId q0;
  // Target of a CNOT; ignored for single-qubit kinds.
  QubitId q1 = 0;

  bool two_qubit() const { return kind == BasicKind::CNOT; }
  bool is_t() const { return kind == BasicKind::T || kind == BasicKind::Tdg; }
};

struct LoweredCircuit {
  std::uint32_t qubit_count = 0;
  std::vector<BasicGate> gates;
  std::vector<QubitRole> roles;
};

struct LayeredCircuit {
  std::uint32_t qubit_count = 0;
  std::vector<std::vector<BasicGate>> layers;
};

struct Metrics {
  std::uint32_t qubit_count = 0;
  std::uint64_t size = 0;     // basic gate count
  std::uint64_t depth = 0;    // scheduled layer count
  std::uint64_t t_count = 0;  // T plus T-dagger gates
  std::uint64_t t_depth = 0;  // layers containing at least one T or T-dagger
};

// Greedy order-respecting packer. Gates are taken in program order and each
// one joins the newest layer when it shares no qubit with that layer,
// otherwise it opens a new layer. A gate never jumps past the open layer, so
// the output is a legal same-order schedule and re-scheduling the flattened
// layers reproduces them.
class LayerTracker {
 public:
  explicit LayerTracker(std::uint32_t qubit_count)
      : last_layer_(qubit_count, kNone) {}

  // Advances the packing state by one gate and returns its layer index.
  std::uint64_t feed(const QubitId* ops, std::size_t count) {
    bool conflict = layer_count_ == 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (last_layer_[ops[i]] == open_ && layer_count_ != 0) {
        conflict = true;
        break;
      }
    }
    if (conflict) {
      open_ = layer_count_++;
    }
    for (std::size_t i = 0; i < count; ++i) {
      last_layer_[ops[i]] = open_;
    }
    return open_;
  }

  std::uint64_t feed(QubitId a) { return feed(&a, 1); }
  std::uint64_t feed(QubitId a, QubitId b) {
    QubitId ops[2] = {a, b};
    return feed(ops, 2);
  }
  std::uint64_t feed(const BasicGate& g) {
    return g.two_qubit() ? feed(g.q0, g.q1) : feed(g.q0);
  }

  bool in_open_layer(QubitId q) const {
    return layer_count_ != 0 && last_layer_[q] == open_;
  }

  std::uint64_t layer_count() const { return layer_count_; }

 private:
  static constexpr std::uint64_t kNone =
      std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> last_layer_;
  std::uint64_t open_ = 0;
  std::uint64_t layer_count_ = 0;
};

LayeredCircuit schedule_layers(const LoweredCircuit& circuit);

Metrics compute_metrics(const LoweredCircuit& circuit);

}  // namespace qactiv
