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

#include "qactiv/relu.hpp"

#include <string>

namespace qactiv {

Circuit build_relu(std::uint32_t n) {
  if (n < 2) {
    throw WidthTooSmall("ReLU needs at least 2 bits, got " +
                        std::to_string(n));
  }
  Circuit c;
  c.qubit_count = 2 * n - 1;
  c.roles.assign(c.qubit_count, QubitRole::Output);
  for (std::uint32_t i = 0; i < n; ++i) {
    c.roles[i] = QubitRole::Input;
  }

  c.add(Gate::x(0));
  for (std::uint32_t i = 1; i < n; ++i) {
    c.add(Gate::toffoli(0, i, n - 1 + i));
  }
  c.add(Gate::x(0));
  return c;
}

BasisState relu_reference(const BasisState& in) {
  std::uint32_t n = in.width();
  BasisState out(n - 1);
  if (!in.get(0)) {
    for (std::uint32_t i = 1; i < n; ++i) {
      out.set(i - 1, in.get(i));
    }
  }
  return out;
}

}  // namespace qactiv
