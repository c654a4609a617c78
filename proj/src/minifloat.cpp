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

#include "qactiv/minifloat.hpp"

#include <cmath>
#include <limits>

namespace qactiv {

namespace {

using U128 = unsigned __int128;

U128 ones(std::uint32_t bits) {
  if (bits == 0) {
    return 0;
  }
  if (bits >= 128) {
    return ~U128{0};
  }
  return (U128{1} << bits) - 1;
}

// Rounds a 64-bit significand (leading bit at position 63) right by `shift`,
// half to even.
std::uint64_t shift_round_even(std::uint64_t m, std::uint32_t shift) {
  if (shift == 0) {
    return m;
  }
  if (shift >= 65) {
    return 0;
  }
  if (shift == 64) {
    // Half point would be 2^63; m < 2^64 so the result is 0 or 1.
    return m > (1ull << 63) ? 1 : 0;
  }
  std::uint64_t head = m >> shift;
  std::uint64_t rem = m & ((shift == 64) ? ~0ull : ((1ull << shift) - 1));
  std::uint64_t half = 1ull << (shift - 1);
  if (rem > half || (rem == half && (head & 1))) {
    ++head;
  }
  return head;
}

}  // namespace

std::optional<FloatFormat> FloatFormat::from_name(const std::string& name) {
  if (name == "f8") return f8();
  if (name == "f16") return f16();
  if (name == "f32") return f32();
  if (name == "f64") return f64();
  if (name == "f128") return f128();
  return std::nullopt;
}

std::string FloatFormat::name() const {
  return "f" + std::to_string(width());
}

EncodedBits encode_float(const FloatFormat& fmt, long double x) {
  const std::uint32_t eb = fmt.exponent_bits;
  const std::uint32_t mb = fmt.mantissa_bits;
  const U128 sign = std::signbit(x) ? (U128{1} << (eb + mb)) : 0;
  const U128 exp_all1 = ones(eb) << mb;

  if (std::isnan(x)) {
    return exp_all1 | (U128{1} << (mb - 1));  // canonical quiet NaN, sign 0
  }
  if (std::isinf(x)) {
    return sign | exp_all1;
  }
  long double a = std::fabs(x);
  if (a == 0.0L) {
    return sign;
  }

  int e;
  long double frac = std::frexp(a, &e);  // a = frac * 2^e, frac in [0.5, 1)
  // The 80-bit significand fits 64 bits exactly.
  std::uint64_t m64 = static_cast<std::uint64_t>(std::ldexp(frac, 64));
  int unbiased = e - 1;  // a = 1.xxx * 2^unbiased

  if (unbiased >= fmt.min_normal_exp()) {
    // Normal candidate: round the significand to mb + 1 bits.
    U128 sig;
    if (mb + 1 >= 64) {
      sig = U128{m64} << (mb + 1 - 64);
    } else {
      std::uint64_t rounded = shift_round_even(m64, 64 - (mb + 1));
      if (rounded >> (mb + 1)) {  // carry out of the significand
        rounded >>= 1;
        ++unbiased;
      }
      sig = rounded;
    }
    if (unbiased > fmt.max_normal_exp()) {
      return sign | exp_all1;  // overflow to infinity
    }
    U128 exp_field = static_cast<U128>(unbiased + fmt.bias()) << mb;
    return sign | exp_field | (sig & ones(mb));
  }

  // Subnormal candidate: f = round(a / 2^(min_normal_exp - mb)).
  int sh = 64 + fmt.min_normal_exp() - static_cast<int>(mb) - e;
  U128 f;
  if (sh <= 0) {
    f = U128{m64} << (-sh);
  } else {
    f = shift_round_even(m64, static_cast<std::uint32_t>(sh));
  }
  if (f >= (U128{1} << mb)) {
    // Rounded up into the smallest normal.
    return sign | (U128{1} << mb) | (f - (U128{1} << mb));
  }
  return sign | f;
}

long double decode_float(const FloatFormat& fmt, EncodedBits bits) {
  const std::uint32_t eb = fmt.exponent_bits;
  const std::uint32_t mb = fmt.mantissa_bits;
  bool negative = (bits >> (eb + mb)) & 1;
  std::uint64_t exp_field =
      static_cast<std::uint64_t>((bits >> mb) & ones(eb));
  U128 man = bits & ones(mb);

  auto man_ld = [&]() {
    // Two halves keep 112-bit mantissas representable without UB.
    long double hi = static_cast<long double>(
        static_cast<std::uint64_t>(man >> 64));
    long double lo = static_cast<long double>(
        static_cast<std::uint64_t>(man & ones(64)));
    return std::ldexp(hi, 64) + lo;
  };

  long double v;
  if (exp_field == (1ull << eb) - 1) {
    if (man == 0) {
      v = std::numeric_limits<long double>::infinity();
    } else {
      return std::numeric_limits<long double>::quiet_NaN();
    }
  } else if (exp_field == 0) {
    v = std::ldexp(man_ld(), fmt.min_normal_exp() - static_cast<int>(mb));
  } else {
    long double full = man_ld() + std::ldexp(1.0L, static_cast<int>(mb));
    v = std::ldexp(full, static_cast<int>(exp_field) - fmt.bias() -
                              static_cast<int>(mb));
  }
  return negative ? -v : v;
}

bool is_nan(const FloatFormat& fmt, EncodedBits bits) {
  std::uint64_t exp_field = static_cast<std::uint64_t>(
      (bits >> fmt.mantissa_bits) & ones(fmt.exponent_bits));
  U128 man = bits & ones(fmt.mantissa_bits);
  return exp_field == ((1ull << fmt.exponent_bits) - 1) && man != 0;
}

bool is_inf(const FloatFormat& fmt, EncodedBits bits) {
  std::uint64_t exp_field = static_cast<std::uint64_t>(
      (bits >> fmt.mantissa_bits) & ones(fmt.exponent_bits));
  U128 man = bits & ones(fmt.mantissa_bits);
  return exp_field == ((1ull << fmt.exponent_bits) - 1) && man == 0;
}

bool is_finite(const FloatFormat& fmt, EncodedBits bits) {
  return !is_nan(fmt, bits) && !is_inf(fmt, bits);
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) {
    return "0";
  }
  std::string s;
  while (v != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

std::string u128_to_sci3(unsigned __int128 v) {
  std::string digits = u128_to_string(v);
  int exp10 = static_cast<int>(digits.size()) - 1;
  // Round to three significant digits, half up.
  std::string d3 = digits.substr(0, 3);
  while (d3.size() < 3) {
    d3.push_back('0');
  }
  if (digits.size() > 3 && digits[3] >= '5') {
    for (int i = 2; i >= 0; --i) {
      if (d3[i] != '9') {
        ++d3[i];
        break;
      }
      d3[i] = '0';
      if (i == 0) {
        d3 = "100";
        ++exp10;
      }
    }
  }
  std::string out;
  out.push_back(d3[0]);
  out.push_back('.');
  out.push_back(d3[1]);
  out.push_back(d3[2]);
  out += "e+";
  if (exp10 < 10) {
    out.push_back('0');
  }
  out += std::to_string(exp10);
  return out;
}

}  // namespace qactiv
