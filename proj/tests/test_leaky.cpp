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

#include <cstdint>

#include "doctest.h"
#include "qactiv/basis_state.hpp"
#include "qactiv/equiv.hpp"
#include "qactiv/gates.hpp"
#include "qactiv/leaky.hpp"
#include "qactiv/lower.hpp"
#include "qactiv/schedule.hpp"

namespace qactiv {
namespace {

// Independent expected-output construction. The output has one sign bit and
// an (n - 1 + e)-bit field read as magnitude * 2^-e. A non-negative x keeps
// its value, so its magnitude lands left-aligned; a negative x is scaled by
// 2^-e, so its payload lands right-aligned. In the 2's-complement form the
// negative branch is a sign extension: the e positions opened up between the
// sign bit and the payload carry copies of the sign.
BasisState leaky_expected(const LeakySpec& spec, const BasisState& in) {
  std::uint32_t n = spec.n;
  std::uint32_t e = spec.alpha_log2;
  std::uint32_t m = n + e;
  bool negative = in.get(0);
  BasisState out(m);
  out.set(0, negative);
  for (std::uint32_t i = 1; i < n; ++i) {
    if (negative) {
      out.set(i + e, in.get(i));
    } else {
      out.set(i, in.get(i));
    }
  }
  if (negative && spec.encoding == SignEncoding::TwosComplement) {
    for (std::uint32_t j = 1; j <= e; ++j) {
      out.set(j, true);
    }
  }
  return out;
}

LeakySpec make_spec(std::uint32_t n, std::uint32_t e, SignEncoding enc) {
  LeakySpec spec;
  spec.n = n;
  spec.alpha_log2 = e;
  spec.encoding = enc;
  return spec;
}

TEST_CASE("leaky reference reproduces the worked 4-bit examples") {
  LeakySpec sm = make_spec(4, 3, SignEncoding::SignMagnitude);
  CHECK(leaky_relu_reference(sm, BasisState::from_string("1011")) ==
        BasisState::from_string("1000011"));
  CHECK(leaky_relu_reference(sm, BasisState::from_string("0011")) ==
        BasisState::from_string("0011000"));

  LeakySpec tc = make_spec(4, 3, SignEncoding::TwosComplement);
  CHECK(leaky_relu_reference(tc, BasisState::from_string("1011")) ==
        BasisState::from_string("1111011"));
  CHECK(leaky_relu_reference(tc, BasisState::from_string("0011")) ==
        BasisState::from_string("0011000"));
}

TEST_CASE("leaky reference equals the independent construction everywhere") {
  for (std::uint32_t n : {2u, 4u, 7u}) {
    for (std::uint32_t e = 3; e <= 6; ++e) {
      for (SignEncoding enc :
           {SignEncoding::SignMagnitude, SignEncoding::TwosComplement}) {
        LeakySpec spec = make_spec(n, e, enc);
        for (std::uint64_t x = 0; x < (1ull << n); ++x) {
          BasisState in = BasisState::from_uint(n, x);
          REQUIRE(leaky_relu_reference(spec, in) == leaky_expected(spec, in));
        }
      }
    }
  }
}

TEST_CASE("leaky circuits are exhaustively correct") {
  for (std::uint32_t n : {2u, 4u, 6u, 9u}) {
    for (std::uint32_t e : {3u, 5u}) {
      for (SignEncoding enc :
           {SignEncoding::SignMagnitude, SignEncoding::TwosComplement}) {
        LeakySpec spec = make_spec(n, e, enc);
        Circuit c = build_leaky_relu(spec);
        CHECK(c.qubit_count == n + spec.output_bits());
        FunctionalSpec fs;
        for (std::uint32_t i = 0; i < n; ++i) {
          fs.input_qubits.push_back(i);
        }
        for (std::uint32_t i = 0; i < spec.output_bits(); ++i) {
          fs.output_qubits.push_back(n + i);
        }
        fs.oracle = [&spec](const BasisState& in) {
          return leaky_expected(spec, in);
        };
        FunctionalReport rep = verify_functional(c, fs);
        CHECK(rep.ok);
        CHECK(rep.exhaustive);
      }
    }
  }
}

TEST_CASE("leaky T-depth is 8 across the parameter plane") {
  for (std::uint32_t n : {4u, 8u, 12u}) {
    for (std::uint32_t e = 3; e <= 6; ++e) {
      for (SignEncoding enc :
           {SignEncoding::SignMagnitude, SignEncoding::TwosComplement}) {
        Metrics m = compute_metrics(lower(build_leaky_relu(make_spec(n, e, enc))));
        CHECK(m.t_depth == 8);
      }
    }
  }
}

TEST_CASE("leaky parameter validation") {
  CHECK_THROWS_AS(build_leaky_relu(make_spec(1, 3, SignEncoding::SignMagnitude)),
                  WidthTooSmall);
  CHECK_THROWS_AS(build_leaky_relu(make_spec(4, 2, SignEncoding::SignMagnitude)),
                  InvalidAlpha);
  CHECK_THROWS_AS(build_leaky_relu(make_spec(4, 7, SignEncoding::SignMagnitude)),
                  InvalidAlpha);
}

TEST_CASE("leaky output register layout") {
  LeakySpec spec = make_spec(5, 4, SignEncoding::SignMagnitude);
  CHECK(spec.output_bits() == 9);
  Circuit c = build_leaky_relu(spec);
  CHECK(c.qubit_count == 14);
  CHECK(c.roles.size() == 14);
  for (std::uint32_t i = 0; i < 5; ++i) {
    CHECK(c.roles[i] == QubitRole::Input);
  }
  for (std::uint32_t i = 5; i < 14; ++i) {
    CHECK(c.roles[i] == QubitRole::Output);
  }
}

}  // namespace
}  // namespace qactiv
