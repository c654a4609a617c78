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

// Dense statevector update kernels. A scalar reference implementation always
// exists; vectorized variants are compiled per architecture and selected at
// runtime. All variants compute bit-identical results apart from floating
// point non-associativity, which these kernels avoid by keeping the exact
// same operation order per amplitude pair.

#pragma once

#include <complex>
#include <cstddef>

namespace qactiv::kern {

using Amp = std::complex<double>;

struct Kernels {
  const char* name;
  // Hadamard on the qubit with index bit `tbit` over `n` amplitudes.
  void (*apply_h)(Amp* amp, std::size_t n, std::size_t tbit);
  // Multiplies every amplitude whose `tbit` is set by `phase`.
  void (*apply_phase)(Amp* amp, std::size_t n, std::size_t tbit, Amp phase);
  // Swaps amplitude pairs that differ in `tbit` where `cbit` is set.
  void (*apply_cnot)(Amp* amp, std::size_t n, std::size_t cbit,
                     std::size_t tbit);
};

const Kernels& scalar_kernels();

// Null when the build or the running CPU lacks the extension.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

// Best available kernel set for this process. Honors QACTIV_KERNEL=scalar
// (or avx2/neon) for forcing a variant.
const Kernels& active_kernels();

}  // namespace qactiv::kern
