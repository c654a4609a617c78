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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qactiv/gates.hpp"

namespace qactiv {

// A computational basis state. Qubit 0 is the most significant position of
// the numeric value and the first character of the string form, so
// from_string("10") has qubit 0 set and equals from_uint(2, 2).
class BasisState {
 public:
  BasisState() = default;
  explicit BasisState(std::uint32_t width)
      : width_(width), words_((width + 63) / 64, 0) {}

  static BasisState from_string(std::string_view bits);
  static BasisState from_uint(std::uint32_t width, std::uint64_t value);

  std::uint32_t width() const { return width_; }

  bool get(QubitId q) const {
    return (words_[q >> 6] >> (q & 63)) & 1u;
  }

  void set(QubitId q, bool v) {
    std::uint64_t mask = 1ull << (q & 63);
    if (v) {
      words_[q >> 6] |= mask;
    } else {
      words_[q >> 6] &= ~mask;
    }
  }

  void flip(QubitId q) { words_[q >> 6] ^= 1ull << (q & 63); }

  // Numeric value with qubit 0 as the most significant bit; width <= 64.
  std::uint64_t to_uint() const;

  std::string str() const;

  bool operator==(const BasisState& o) const {
    return width_ == o.width_ && words_ == o.words_;
  }
  bool operator!=(const BasisState& o) const { return !(*this == o); }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::uint32_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BasisStateHash {
  std::size_t operator()(const BasisState& s) const {
    std::uint64_t h = 1469598103934665603ull ^ s.width();
    for (std::uint64_t w : s.words()) {
      h = (h ^ w) * 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace qactiv
