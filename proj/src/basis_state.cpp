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

#include "qactiv/basis_state.hpp"

namespace qactiv {

BasisState BasisState::from_string(std::string_view bits) {
  BasisState s(static_cast<std::uint32_t>(bits.size()));
  for (std::uint32_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s.set(i, true);
    } else if (bits[i] != '0') {
      throw ParseError("basis state strings may only contain 0 and 1");
    }
  }
  return s;
}

BasisState BasisState::from_uint(std::uint32_t width, std::uint64_t value) {
  if (width > 64) {
    throw TooManyQubits("from_uint supports at most 64 qubits");
  }
  BasisState s(width);
  for (std::uint32_t i = 0; i < width; ++i) {
    s.set(i, (value >> (width - 1 - i)) & 1u);
  }
  return s;
}

std::uint64_t BasisState::to_uint() const {
  if (width_ > 64) {
    throw TooManyQubits("to_uint supports at most 64 qubits");
  }
  std::uint64_t v = 0;
  for (std::uint32_t i = 0; i < width_; ++i) {
    v = (v << 1) | (get(i) ? 1u : 0u);
  }
  return v;
}

std::string BasisState::str() const {
  std::string s(width_, '0');
  for (std::uint32_t i = 0; i < width_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

}  // namespace qactiv
