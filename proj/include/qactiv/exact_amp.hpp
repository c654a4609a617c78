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

#include <complex>
#include <cstdint>

namespace qactiv {

// Exact Clifford+T amplitude: (a + b*w + c*w^2 + d*w^3) / sqrt(2)^k with
// w = exp(i*pi/4), i.e. an element of Z[w, 1/sqrt(2)]. Every constructor and
// operation keeps the value in canonical form (minimal k), so operator== is
// exact value equality.
struct ExactAmplitude {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
  int k = 0;

  static ExactAmplitude zero() { return {}; }
  static ExactAmplitude one() { return {1, 0, 0, 0, 0}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

  // Multiplies by w^j (j taken mod 8); w^4 = -1.
  ExactAmplitude times_omega(int j) const;

  ExactAmplitude plus(const ExactAmplitude& o) const;
  ExactAmplitude minus(const ExactAmplitude& o) const;

  // Divides by sqrt(2) (increments k, then reduces).
  ExactAmplitude div_sqrt2() const;

  std::complex<double> to_complex() const;

  bool operator==(const ExactAmplitude& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d && k == o.k;
  }
  bool operator!=(const ExactAmplitude& o) const { return !(*this == o); }

  // Restores minimal k. Internal, but useful in tests.
  void reduce();
};

}  // namespace qactiv
