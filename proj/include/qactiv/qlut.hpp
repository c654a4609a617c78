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
#include <optional>
#include <string>
#include <vector>

#include "qactiv/gates.hpp"
#include "qactiv/minifloat.hpp"

namespace qactiv {

enum class Activation : std::uint8_t { Sigmoid, Tanh, Swish, Elu, Gelu };

const char* to_string(Activation a);
std::optional<Activation> activation_from_name(const std::string& name);
long double eval_activation(Activation a, long double x);

struct LookupTable {
  FloatFormat format;
  // entries[x] is the encoded f(decode(x)), indexed by the raw input bits.
  std::vector<std::uint32_t> entries;

  std::uint32_t input_bits() const { return format.width(); }
};

// Tabulates an activation over every bit pattern of the format.
// Materialization is capped at 16 input bits.
LookupTable build_table(Activation a, const FloatFormat& format);

// Select-swap lookup circuit for an n-bit-to-n-bit table, with l >= 1 swap
// stages (2^l register copies). Qubit map: 0..n-1 input (the low l bits
// drive the swap network), then 2^l output registers of n qubits each;
// register 0 (qubits n..2n-1) ends holding table[x]. The other registers are
// garbage. T-depth: 2^(n-l) * mcx_t_depth(n-l) + 4l.
Circuit build_qlut(const LookupTable& table, std::uint32_t l);

struct QlutCost {
  unsigned __int128 t_depth = 0;
  unsigned __int128 ancillas = 0;
};

// Closed-form cost of build_qlut for an n-bit format, without building it.
QlutCost qlut_cost(std::uint32_t n, std::uint32_t l);

struct ErrorScanOptions {
  long double bound = 3.75L;  // scan |x| < bound
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20260817;
};

// Max absolute error of the tabulated activation against long double
// evaluation, over all representable inputs inside the bound plus uniform
// random samples.
double table_max_error(Activation a, const FloatFormat& format,
                       const ErrorScanOptions& opts = {});

}  // namespace qactiv
