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

#include "qactiv/exact_amp.hpp"

#include <cmath>

namespace qactiv {

namespace {

// Multiplying the coefficient vector by sqrt(2) stays inside Z[w]:
// sqrt(2) = w - w^3, so sqrt(2)*(a + b w + c w^2 + d w^3)
//         = (b - d) + (a + c) w + (b + d) w^2 + (c - a) w^3.
void lift(std::int64_t& a, std::int64_t& b, std::int64_t& c, std::int64_t& d) {
  std::int64_t na = b - d;
  std::int64_t nb = a + c;
  std::int64_t nc = b + d;
  std::int64_t nd = c - a;
  a = na;
  b = nb;
  c = nc;
  d = nd;
}

}  // namespace

void ExactAmplitude::reduce() {
  if (is_zero()) {
    k = 0;
    return;
  }
  while (k > 0 && ((a - c) & 1) == 0 && ((b - d) & 1) == 0) {
    std::int64_t na = (b - d) / 2;
    std::int64_t nb = (a + c) / 2;
    std::int64_t nc = (b + d) / 2;
    std::int64_t nd = (c - a) / 2;
    a = na;
    b = nb;
    c = nc;
    d = nd;
    --k;
  }
}

ExactAmplitude ExactAmplitude::times_omega(int j) const {
  ExactAmplitude r = *this;
  int m = ((j % 8) + 8) % 8;
  for (int i = 0; i < m; ++i) {
    std::int64_t na = -r.d;
    r.d = r.c;
    r.c = r.b;
    r.b = r.a;
    r.a = na;
  }
  return r;
}

ExactAmplitude ExactAmplitude::plus(const ExactAmplitude& o) const {
  ExactAmplitude x = *this;
  ExactAmplitude y = o;
  while (x.k < y.k) {
    lift(x.a, x.b, x.c, x.d);
    ++x.k;
  }
  while (y.k < x.k) {
    lift(y.a, y.b, y.c, y.d);
    ++y.k;
  }
  ExactAmplitude r{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d, x.k};
  r.reduce();
  return r;
}

ExactAmplitude ExactAmplitude::minus(const ExactAmplitude& o) const {
  ExactAmplitude neg{-o.a, -o.b, -o.c, -o.d, o.k};
  return plus(neg);
}

ExactAmplitude ExactAmplitude::div_sqrt2() const {
  ExactAmplitude r = *this;
  if (r.is_zero()) {
    return r;
  }
  ++r.k;
  r.reduce();
  return r;
}

std::complex<double> ExactAmplitude::to_complex() const {
  const double rt = std::sqrt(0.5);
  double re = static_cast<double>(a) + rt * static_cast<double>(b - d);
  double im = static_cast<double>(c) + rt * static_cast<double>(b + d);
  double scale = std::pow(std::sqrt(2.0), -k);
  return {re * scale, im * scale};
}

}  // namespace qactiv
