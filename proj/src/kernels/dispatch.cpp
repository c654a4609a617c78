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

#include <cstdlib>
#include <cstring>

#include "kernels.hpp"

namespace qactiv::kern {

const Kernels* avx2_kernels_impl();
const Kernels* neon_kernels_impl();

const Kernels* avx2_kernels() {
#if defined(QACTIV_AVX2_TU) && defined(__x86_64__)
  if (__builtin_cpu_supports("avx2")) {
    return avx2_kernels_impl();
  }
#endif
  return nullptr;
}

const Kernels* neon_kernels() {
#if defined(QACTIV_NEON_TU)
  return neon_kernels_impl();
#else
  return nullptr;
#endif
}

const Kernels& active_kernels() {
  static const Kernels* chosen = [] {
    const char* forced = std::getenv("QACTIV_KERNEL");
    if (forced != nullptr) {
      if (std::strcmp(forced, "scalar") == 0) {
        return &scalar_kernels();
      }
      if (std::strcmp(forced, "avx2") == 0 && avx2_kernels() != nullptr) {
        return avx2_kernels();
      }
      if (std::strcmp(forced, "neon") == 0 && neon_kernels() != nullptr) {
        return neon_kernels();
      }
    }
    if (const Kernels* k = avx2_kernels()) {
      return k;
    }
    if (const Kernels* k = neon_kernels()) {
      return k;
    }
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace qactiv::kern
