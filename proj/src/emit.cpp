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

#include "emit.hpp"

#include <algorithm>

namespace qactiv::detail {

void emit_packed_column(NetSink& sink, const std::vector<Gate>& column) {
  const Gate* opener = nullptr;
  for (const Gate& g : column) {
    if (g.kind == GateKind::PhasePower) {
      continue;
    }
    bool conflicts = false;
    for (QubitId q : g.operands) {
      conflicts = conflicts || sink.in_open_layer(q);
    }
    if (conflicts) {
      opener = &g;
      break;
    }
  }
  if (opener != nullptr) {
    sink.emit(*opener);
  }
  for (const Gate& g : column) {
    if (&g != opener && g.kind != GateKind::PhasePower) {
      sink.emit(g);
    }
  }
  for (const Gate& g : column) {
    if (g.kind == GateKind::PhasePower) {
      sink.emit(g);
    }
  }
}

namespace {

void index_tree_rec(const std::vector<QubitId>& targets, std::size_t lo,
                    std::size_t hi, std::uint32_t stage, FanoutPlan& plan) {
  if (hi - lo <= 1) {
    return;
  }
  std::size_t mid = lo + (hi - lo + 1) / 2;
  plan.edges.push_back({targets[lo], targets[mid], stage});
  plan.stage_count = std::max(plan.stage_count, stage + 1);
  index_tree_rec(targets, lo, mid, stage + 1, plan);
  index_tree_rec(targets, mid, hi, stage + 1, plan);
}

}  // namespace

FanoutPlan plan_index_fanout(const std::vector<QubitId>& targets) {
  FanoutPlan plan;
  if (targets.empty()) {
    return plan;
  }
  plan.root = targets[0];
  index_tree_rec(targets, 0, targets.size(), 0, plan);
  return plan;
}

std::vector<Gate> direct_edge(QubitId src, QubitId dst) {
  return {Gate::cnot(src, dst)};
}

void emit_mirrored_fanout(NetSink& sink, const FanoutPlan& plan,
                          const EdgeRouter& route,
                          const std::function<void()>& middle) {
  std::vector<Gate> forward;
  if (plan.stage_count > 0) {
    std::vector<std::vector<const PlanEdge*>> by_stage(plan.stage_count);
    for (const PlanEdge& e : plan.edges) {
      by_stage[e.stage].push_back(&e);
    }
    for (std::uint32_t s = plan.stage_count; s-- > 0;) {
      std::vector<std::vector<Gate>> streams;
      streams.reserve(by_stage[s].size());
      for (const PlanEdge* e : by_stage[s]) {
        streams.push_back(route(e->src, e->dst));
      }
      std::size_t longest = 0;
      for (const auto& st : streams) {
        longest = std::max(longest, st.size());
      }
      // Interleave the disjoint edge streams so they schedule concurrently.
      for (std::size_t r = 0; r < longest; ++r) {
        for (const auto& st : streams) {
          if (r < st.size()) {
            forward.push_back(st[r]);
          }
        }
      }
    }
  }
  for (const Gate& g : forward) {
    sink.emit(g);
  }
  middle();
  for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
    sink.emit(*it);
  }
}

void emit_flat_fanout(NetSink& sink, QubitId source,
                      const std::vector<QubitId>& targets) {
  if (targets.empty()) {
    return;
  }
  FanoutPlan plan = plan_index_fanout(targets);
  emit_mirrored_fanout(sink, plan, direct_edge,
                       [&] { sink.emit(Gate::cnot(source, plan.root)); });
}

void emit_shared_control_batch(NetSink& sink, QubitId shared,
                               const std::vector<ToffoliPair>& pairs,
                               const FanoutEmitter& fanout) {
  std::vector<QubitId> targets;
  std::vector<QubitId> controls;
  targets.reserve(pairs.size());
  controls.reserve(pairs.size());
  for (const ToffoliPair& p : pairs) {
    targets.push_back(p.target);
    controls.push_back(p.control2);
  }
  int residual = static_cast<int>(pairs.size() % 8);

  for (QubitId t : targets) {
    sink.emit(Gate::h(t));
  }
  for (const ToffoliPair& p : pairs) {
    sink.emit(Gate::cnot(p.control2, p.target));
  }
  std::vector<Gate> col;
  for (QubitId t : targets) {
    col.push_back(Gate::tdg(t));
  }
  emit_packed_column(sink, col);

  fanout(sink, shared, targets);

  col.clear();
  for (QubitId t : targets) {
    col.push_back(Gate::t(t));
  }
  emit_packed_column(sink, col);

  for (const ToffoliPair& p : pairs) {
    sink.emit(Gate::cnot(p.control2, p.target));
  }
  col.clear();
  for (QubitId c : controls) {
    col.push_back(Gate::t(c));
  }
  for (QubitId t : targets) {
    col.push_back(Gate::tdg(t));
  }
  emit_packed_column(sink, col);

  fanout(sink, shared, targets);
  fanout(sink, shared, controls);

  col.clear();
  for (QubitId c : controls) {
    col.push_back(Gate::tdg(c));
  }
  for (QubitId t : targets) {
    col.push_back(Gate::t(t));
  }
  if (residual != 0) {
    col.push_back(Gate::phase_power(shared, residual));
  }
  emit_packed_column(sink, col);

  fanout(sink, shared, controls);
  for (QubitId t : targets) {
    sink.emit(Gate::h(t));
  }
}

void emit_cswap_batch(NetSink& sink, QubitId control,
                      const std::vector<SwapPair>& pairs,
                      const FanoutEmitter& fanout) {
  std::vector<ToffoliPair> tofs;
  tofs.reserve(pairs.size());
  for (const SwapPair& p : pairs) {
    sink.emit(Gate::cnot(p.b, p.a));
    tofs.push_back({p.a, p.b});
  }
  emit_shared_control_batch(sink, control, tofs, fanout);
  for (const SwapPair& p : pairs) {
    sink.emit(Gate::cnot(p.b, p.a));
  }
}

}  // namespace qactiv::detail
