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

#include "qactiv/basis_state.hpp"
#include "qactiv/gates.hpp"

namespace qactiv {

enum class SignEncoding : std::uint8_t {
  SignMagnitude,
  TwosComplement,
};

const char* to_string(SignEncoding encoding);

struct LeakySpec {
  std::uint32_t n = 0;          // input bits, sign first
  std::uint32_t alpha_log2 = 3; // slope alpha = 2^-alpha_log2, in 3..6
  SignEncoding encoding = SignEncoding::SignMagnitude;

  std::uint32_t output_bits() const { return n + alpha_log2; }
};

// Leaky ReLU with slope 1/2^e: the output register (n + e bits, e extra
// fraction bits) receives x when the sign is 0 and x shifted down by e
// places when the sign is 1. Two shared-control Toffoli batches, lowered
// T-depth 8 for every width.
//
// Qubits 0..n-1: input; n..n+m-1: output (m = n + e).
Circuit build_leaky_relu(const LeakySpec& spec);

// in: n bits; out: the m output bits.
BasisState leaky_relu_reference(const LeakySpec& spec, const BasisState& in);

}  // namespace qactiv
