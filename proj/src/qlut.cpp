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

#include "qactiv/qlut.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "emit.hpp"
#include "qactiv/synthesis.hpp"

namespace qactiv {

const char* to_string(Activation a) {
  switch (a) {
    case Activation::Sigmoid: return "sigmoid";
    case Activation::Tanh: return "tanh";
    case Activation::Swish: return "swish";
    case Activation::Elu: return "elu";
    case Activation::Gelu: return "gelu";
  }
  return "?";
}

std::optional<Activation> activation_from_name(const std::string& name) {
  for (Activation a : {Activation::Sigmoid, Activation::Tanh,
                       Activation::Swish, Activation::Elu, Activation::Gelu}) {
    if (name == to_string(a)) {
      return a;
    }
  }
  return std::nullopt;
}

long double eval_activation(Activation a, long double x) {
  switch (a) {
    case Activation::Sigmoid:
      if (x >= 0.0L) {
        return 1.0L / (1.0L + std::exp(-x));
      } else {
        long double e = std::exp(x);
        return e / (1.0L + e);
      }
    case Activation::Tanh:
      return std::tanh(x);
    case Activation::Swish:
      return x * eval_activation(Activation::Sigmoid, x);
    case Activation::Elu:
      return x >= 0.0L ? x : std::expm1(x);
    case Activation::Gelu:
      return 0.5L * x * std::erfc(-x * 0.70710678118654752440L);
  }
  return 0.0L;
}

LookupTable build_table(Activation a, const FloatFormat& format) {
  const std::uint32_t n = format.width();
  if (n > 16) {
    throw TableTooLarge("table materialization capped at 16 input bits, " +
                        format.name() + " has " + std::to_string(n));
  }
  LookupTable table{format, {}};
  table.entries.resize(std::size_t{1} << n);
  for (std::size_t x = 0; x < table.entries.size(); ++x) {
    long double in = decode_float(format, x);
    long double out = eval_activation(a, in);
    table.entries[x] =
        static_cast<std::uint32_t>(encode_float(format, out));
  }
  return table;
}

Circuit build_qlut(const LookupTable& table, std::uint32_t l) {
  const std::uint32_t n = table.input_bits();
  if (l < 1 || l >= n) {
    throw InvalidSwapCount("swap stages must satisfy 1 <= l <= n-1, got l = " +
                           std::to_string(l) + " for n = " +
                           std::to_string(n));
  }
  if (table.entries.size() != (std::size_t{1} << n)) {
    throw TableTooLarge("table has " + std::to_string(table.entries.size()) +
                        " entries, expected 2^" + std::to_string(n));
  }
  const std::uint32_t copies = 1u << l;
  const std::uint32_t select_bits = n - l;

  Circuit c;
  c.qubit_count = n + n * copies;
  c.roles.assign(c.qubit_count, QubitRole::Garbage);
  for (std::uint32_t i = 0; i < select_bits; ++i) {
    c.roles[i] = QubitRole::Input;
  }
  for (std::uint32_t i = select_bits; i < n; ++i) {
    c.roles[i] = QubitRole::SwapAddress;
  }
  for (std::uint32_t b = 0; b < n; ++b) {
    c.roles[n + b] = QubitRole::Output;
  }
  auto reg_qubit = [&](std::uint32_t r, std::uint32_t b) {
    return n + r * n + b;
  };

  detail::CircuitSink cs(c);
  detail::NetSink sink = cs.sink();

  std::vector<QubitId> controls(select_bits);
  for (std::uint32_t i = 0; i < select_bits; ++i) {
    controls[i] = i;
  }

  // SELECT: one multiplexed write per address block. Registers whose entry
  // is all-zero contribute no targets; a block of zero entries costs
  // nothing.
  for (std::uint32_t step = 0; step < (1u << select_bits); ++step) {
    std::vector<QubitId> mask;
    for (std::uint32_t r = 0; r < copies; ++r) {
      std::uint32_t entry = table.entries[(std::size_t{step} << l) | r];
      for (std::uint32_t b = 0; b < n; ++b) {
        if ((entry >> (n - 1 - b)) & 1u) {
          mask.push_back(reg_qubit(r, b));
        }
      }
    }
    if (mask.empty()) {
      continue;
    }
    auto conjugate_x = [&] {
      for (std::uint32_t i = 0; i < select_bits; ++i) {
        if (((step >> (select_bits - 1 - i)) & 1u) == 0) {
          sink.emit(Gate::x(controls[i]));
        }
      }
    };
    conjugate_x();
    detail::FanoutPlan plan = detail::plan_index_fanout(mask);
    detail::emit_mirrored_fanout(sink, plan, detail::direct_edge, [&] {
      if (select_bits == 1) {
        sink.emit(Gate::cnot(controls[0], plan.root));
      } else if (select_bits == 2) {
        sink.emit(Gate::toffoli(controls[0], controls[1], plan.root));
      } else {
        sink.emit(Gate::multi_controlled_x(controls, plan.root));
      }
    });
    conjugate_x();
  }

  // SWAP: stage i halves the candidate registers, steered by input bit
  // n-1-i (the low address bits, least significant first).
  for (std::uint32_t i = 0; i < l; ++i) {
    QubitId steer = n - 1 - i;
    for (std::uint32_t r = 0; r + (1u << i) < copies; r += (2u << i)) {
      for (std::uint32_t b = 0; b < n; ++b) {
        c.gates.push_back(
            Gate::cswap(steer, reg_qubit(r, b), reg_qubit(r + (1u << i), b)));
      }
    }
  }
  validate(c);
  return c;
}

QlutCost qlut_cost(std::uint32_t n, std::uint32_t l) {
  if (l < 1 || l >= n) {
    throw InvalidSwapCount("swap stages must satisfy 1 <= l <= n-1, got l = " +
                           std::to_string(l) + " for n = " +
                           std::to_string(n));
  }
  QlutCost cost;
  cost.t_depth = (unsigned __int128){1} << (n - l);
  cost.t_depth *= mcx_t_depth(n - l);
  cost.t_depth += 4ull * l;
  cost.ancillas = (unsigned __int128){n} << l;
  return cost;
}

double table_max_error(Activation a, const FloatFormat& format,
                       const ErrorScanOptions& opts) {
  LookupTable table = build_table(a, format);
  auto err_at = [&](long double x) {
    EncodedBits in = encode_float(format, x);
    long double approx =
        decode_float(format, table.entries[static_cast<std::size_t>(in)]);
    return std::fabs(approx - eval_activation(a, x));
  };
  long double worst = 0.0L;
  for (std::size_t bits = 0; bits < table.entries.size(); ++bits) {
    if (!is_finite(format, bits)) {
      continue;
    }
    long double x = decode_float(format, bits);
    if (std::fabs(x) < opts.bound) {
      worst = std::max(worst, err_at(x));
    }
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> dist(
      -static_cast<double>(opts.bound), static_cast<double>(opts.bound));
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    worst = std::max(worst, err_at(dist(rng)));
  }
  return static_cast<double>(worst);
}

}  // namespace qactiv
