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

// AVX2 statevector kernels. One __m256d holds two complex<double>
// amplitudes; target bit 0 interleaves the pair members, so that case falls
// back to the scalar loop.

#include "kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace qactiv::kern {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

void h_avx2(Amp* amp, std::size_t n, std::size_t tbit) {
  const std::size_t stride = std::size_t{1} << tbit;
  if (stride < 2 || n < 4) {
    scalar_kernels().apply_h(amp, n, tbit);
    return;
  }
  double* p = reinterpret_cast<double*>(amp);
  const __m256d s = _mm256_set1_pd(kInvSqrt2);
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; off += 2) {
      double* u = p + 2 * (base + off);
      double* v = p + 2 * (base + off + stride);
      __m256d mu = _mm256_loadu_pd(u);
      __m256d mv = _mm256_loadu_pd(v);
      _mm256_storeu_pd(u, _mm256_mul_pd(_mm256_add_pd(mu, mv), s));
      _mm256_storeu_pd(v, _mm256_mul_pd(_mm256_sub_pd(mu, mv), s));
    }
  }
}

void phase_avx2(Amp* amp, std::size_t n, std::size_t tbit, Amp phase) {
  const std::size_t stride = std::size_t{1} << tbit;
  if (stride < 2 || n < 4) {
    scalar_kernels().apply_phase(amp, n, tbit, phase);
    return;
  }
  double* p = reinterpret_cast<double*>(amp);
  const __m256d re = _mm256_set1_pd(phase.real());
  const __m256d im = _mm256_set1_pd(phase.imag());
  for (std::size_t base = stride; base < n; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; off += 2) {
      double* v = p + 2 * (base + off);
      __m256d mv = _mm256_loadu_pd(v);
      __m256d swapped = _mm256_permute_pd(mv, 0x5);
      // (re*pr - im*pi, im*pr + re*pi) per complex lane.
      __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(mv, re),
                                      _mm256_mul_pd(swapped, im));
      _mm256_storeu_pd(v, prod);
    }
  }
}

void cnot_avx2(Amp* amp, std::size_t n, std::size_t cbit, std::size_t tbit) {
  const std::size_t tm = std::size_t{1} << tbit;
  const std::size_t cm = std::size_t{1} << cbit;
  // A control or target on bit 0 splits the two lanes of a vector.
  if (tm < 2 || cm < 2 || n < 4) {
    scalar_kernels().apply_cnot(amp, n, cbit, tbit);
    return;
  }
  double* p = reinterpret_cast<double*>(amp);
  for (std::size_t base = 0; base < n; base += 2 * tm) {
    for (std::size_t off = 0; off < tm; off += 2) {
      std::size_t i = base + off;
      if ((i & cm) == 0) {
        continue;
      }
      double* u = p + 2 * i;
      double* v = p + 2 * (i | tm);
      __m256d mu = _mm256_loadu_pd(u);
      __m256d mv = _mm256_loadu_pd(v);
      _mm256_storeu_pd(u, mv);
      _mm256_storeu_pd(v, mu);
    }
  }
}

}  // namespace

const Kernels* avx2_kernels_impl() {
  static const Kernels k = {"avx2", h_avx2, phase_avx2, cnot_avx2};
  return &k;
}

}  // namespace qactiv::kern

#else

namespace qactiv::kern {
const Kernels* avx2_kernels_impl() { return nullptr; }
}  // namespace qactiv::kern

#endif
