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

#include "qactiv/leaky.hpp"

#include <string>

namespace qactiv {

const char* to_string(SignEncoding encoding) {
  switch (encoding) {
    case SignEncoding::SignMagnitude: return "sign_magnitude";
    case SignEncoding::TwosComplement: return "twos_complement";
  }
  return "?";
}

Circuit build_leaky_relu(const LeakySpec& spec) {
  if (spec.n < 2) {
    throw WidthTooSmall("leaky ReLU needs at least 2 bits, got " +
                        std::to_string(spec.n));
  }
  if (spec.alpha_log2 < 3 || spec.alpha_log2 > 6) {
    throw InvalidAlpha("alpha must be 2^-e with e in 3..6, got e = " +
                       std::to_string(spec.alpha_log2));
  }
  const std::uint32_t n = spec.n;
  const std::uint32_t e = spec.alpha_log2;
  const std::uint32_t m = n + e;
  // Shift distance of the magnitude inside the output register.
  const std::uint32_t k = e + 1;

  Circuit c;
  c.qubit_count = n + m;
  c.roles.assign(c.qubit_count, QubitRole::Output);
  for (std::uint32_t i = 0; i < n; ++i) {
    c.roles[i] = QubitRole::Input;
  }
  auto out = [&](std::uint32_t j) { return n + j - 1; };  // 1-based position

  // Sign 0: copy the tail to output positions 2..n.
  c.add(Gate::x(0));
  for (std::uint32_t i = 1; i < n; ++i) {
    c.add(Gate::toffoli(0, i, out(i + 1)));
  }
  c.add(Gate::x(0));
  // Sign 1: copy the tail k positions later, realizing the 2^-e scaling.
  for (std::uint32_t i = 1; i < n; ++i) {
    c.add(Gate::toffoli(0, i, out(i + k)));
  }
  // The output sign always mirrors the input sign.
  c.add(Gate::cnot(0, out(1)));
  if (spec.encoding == SignEncoding::TwosComplement) {
    // Arithmetic shift: a negative value drags ones into the widened head.
    for (std::uint32_t j = 2; j <= k; ++j) {
      c.add(Gate::cnot(0, out(j)));
    }
  }
  return c;
}

BasisState leaky_relu_reference(const LeakySpec& spec, const BasisState& in) {
  const std::uint32_t n = spec.n;
  const std::uint32_t e = spec.alpha_log2;
  BasisState out(spec.output_bits());
  bool sign = in.get(0);
  if (!sign) {
    // [x1..xn, 0^e]
    for (std::uint32_t i = 0; i < n; ++i) {
      out.set(i, in.get(i));
    }
  } else {
    // [sign, fill^e, x2..xn]
    out.set(0, true);
    bool fill = spec.encoding == SignEncoding::TwosComplement;
    for (std::uint32_t j = 1; j <= e; ++j) {
      out.set(j, fill);
    }
    for (std::uint32_t i = 1; i < n; ++i) {
      out.set(e + i, in.get(i));
    }
  }
  return out;
}

}  // namespace qactiv
