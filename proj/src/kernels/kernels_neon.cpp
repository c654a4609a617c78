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

// NEON statevector kernels: one float64x2_t per complex<double> amplitude.

#include "kernels.hpp"

#if defined(__ARM_NEON) || defined(__ARM_NEON__)

#include <arm_neon.h>

namespace qactiv::kern {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

void h_neon(Amp* amp, std::size_t n, std::size_t tbit) {
  const std::size_t stride = std::size_t{1} << tbit;
  double* p = reinterpret_cast<double*>(amp);
  const float64x2_t s = vdupq_n_f64(kInvSqrt2);
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      double* u = p + 2 * (base + off);
      double* v = p + 2 * (base + off + stride);
      float64x2_t mu = vld1q_f64(u);
      float64x2_t mv = vld1q_f64(v);
      vst1q_f64(u, vmulq_f64(vaddq_f64(mu, mv), s));
      vst1q_f64(v, vmulq_f64(vsubq_f64(mu, mv), s));
    }
  }
}

void phase_neon(Amp* amp, std::size_t n, std::size_t tbit, Amp phase) {
  const std::size_t stride = std::size_t{1} << tbit;
  double* p = reinterpret_cast<double*>(amp);
  const float64x2_t re = vdupq_n_f64(phase.real());
  // (-pi, +pi) so a single fused op yields (re*pr - im*pi, im*pr + re*pi).
  const double pi_hi = phase.imag();
  const float64x2_t im = vcombine_f64(vdup_n_f64(-pi_hi), vdup_n_f64(pi_hi));
  for (std::size_t base = stride; base < n; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      double* v = p + 2 * (base + off);
      float64x2_t mv = vld1q_f64(v);
      float64x2_t swapped = vextq_f64(mv, mv, 1);
      vst1q_f64(v, vmlaq_f64(vmulq_f64(swapped, im), mv, re));
    }
  }
}

void cnot_neon(Amp* amp, std::size_t n, std::size_t cbit, std::size_t tbit) {
  scalar_kernels().apply_cnot(amp, n, cbit, tbit);
}

}  // namespace

const Kernels* neon_kernels_impl() {
  static const Kernels k = {"neon", h_neon, phase_neon, cnot_neon};
  return &k;
}

}  // namespace qactiv::kern

#else

namespace qactiv::kern {
const Kernels* neon_kernels_impl() { return nullptr; }
}  // namespace qactiv::kern

#endif
