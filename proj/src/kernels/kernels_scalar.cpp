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

#include "kernels.hpp"

namespace qactiv::kern {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

void h_scalar(Amp* amp, std::size_t n, std::size_t tbit) {
  const std::size_t stride = std::size_t{1} << tbit;
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      Amp u = amp[base + off];
      Amp v = amp[base + off + stride];
      amp[base + off] = (u + v) * kInvSqrt2;
      amp[base + off + stride] = (u - v) * kInvSqrt2;
    }
  }
}

void phase_scalar(Amp* amp, std::size_t n, std::size_t tbit, Amp phase) {
  const std::size_t stride = std::size_t{1} << tbit;
  for (std::size_t base = stride; base < n; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      amp[base + off] *= phase;
    }
  }
}

void cnot_scalar(Amp* amp, std::size_t n, std::size_t cbit,
                 std::size_t tbit) {
  const std::size_t cm = std::size_t{1} << cbit;
  const std::size_t tm = std::size_t{1} << tbit;
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & cm) != 0 && (i & tm) == 0) {
      Amp tmp = amp[i];
      amp[i] = amp[i | tm];
      amp[i | tm] = tmp;
    }
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {"scalar", h_scalar, phase_scalar, cnot_scalar};
  return k;
}

}  // namespace qactiv::kern
