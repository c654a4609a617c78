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

#include "qactiv/gates.hpp"

namespace qactiv {

// Bit pattern of an encoded float, wide enough for the 128-bit format.
using EncodedBits = unsigned __int128;

// IEEE-style binary format: 1 sign bit, then exponent, then mantissa.
// Subnormals, signed zero, infinities and NaN behave as usual; rounding is
// to nearest, ties to even.
struct FloatFormat {
  std::uint32_t exponent_bits = 0;
  std::uint32_t mantissa_bits = 0;

  std::uint32_t width() const { return 1 + exponent_bits + mantissa_bits; }
  int bias() const { return (1 << (exponent_bits - 1)) - 1; }
  int min_normal_exp() const { return 1 - bias(); }
  int max_normal_exp() const { return (1 << exponent_bits) - 2 - bias(); }

  static FloatFormat f8() { return {4, 3}; }
  static FloatFormat f16() { return {5, 10}; }
  static FloatFormat f32() { return {8, 23}; }
  static FloatFormat f64() { return {11, 52}; }
  static FloatFormat f128() { return {15, 112}; }

  // "f8", "f16", "f32", "f64", "f128".
  static std::optional<FloatFormat> from_name(const std::string& name);
  std::string name() const;
};

// Rounds x into the format. NaN becomes the canonical quiet NaN (mantissa
// MSB set); values past the overflow threshold become infinity.
EncodedBits encode_float(const FloatFormat& format, long double x);

// Exact for formats with at most 64 mantissa bits; the 128-bit format is
// rounded into long double.
long double decode_float(const FloatFormat& format, EncodedBits bits);

bool is_nan(const FloatFormat& format, EncodedBits bits);
bool is_inf(const FloatFormat& format, EncodedBits bits);
bool is_finite(const FloatFormat& format, EncodedBits bits);

std::string u128_to_string(unsigned __int128 v);
// Three significant figures, scientific: "1.02e+04".
std::string u128_to_sci3(unsigned __int128 v);

}  // namespace qactiv
