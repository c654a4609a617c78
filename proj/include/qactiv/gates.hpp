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
#include <stdexcept>
#include <string>
#include <vector>

namespace qactiv {

using QubitId = std::uint32_t;

// Macro-level gate alphabet. The first six kinds are the Clifford+T basis the
// backend executes; the rest are convenience macros removed by lower().
enum class GateKind : std::uint8_t {
  H,
  S,
  Sdg,
  T,
  Tdg,
  CNOT,
  X,
  Swap,
  Toffoli,
  MultiControlledX,
  CSwap,
  PhasePower,
};

const char* to_string(GateKind kind);
bool is_basic(GateKind kind);

struct Gate {
  GateKind kind;
  std::vector<QubitId> operands;
  // PhasePower exponent k, meaning diag(1, exp(i k pi/4)). Unused otherwise.
  int param = 0;

  static Gate h(QubitId q) { return {GateKind::H, {q}, 0}; }
  static Gate s(QubitId q) { return {GateKind::S, {q}, 0}; }
  static Gate sdg(QubitId q) { return {GateKind::Sdg, {q}, 0}; }
  static Gate t(QubitId q) { return {GateKind::T, {q}, 0}; }
  static Gate tdg(QubitId q) { return {GateKind::Tdg, {q}, 0}; }
  static Gate cnot(QubitId c, QubitId t) { return {GateKind::CNOT, {c, t}, 0}; }
  static Gate x(QubitId q) { return {GateKind::X, {q}, 0}; }
  static Gate swap(QubitId a, QubitId b) { return {GateKind::Swap, {a, b}, 0}; }
  static Gate toffoli(QubitId c1, QubitId c2, QubitId t) {
    return {GateKind::Toffoli, {c1, c2, t}, 0};
  }
  static Gate multi_controlled_x(std::vector<QubitId> controls, QubitId t);
  static Gate cswap(QubitId c, QubitId a, QubitId b) {
    return {GateKind::CSwap, {c, a, b}, 0};
  }
  static Gate phase_power(QubitId q, int k) {
    return {GateKind::PhasePower, {q}, k};
  }
};

enum class QubitRole : std::uint8_t {
  Input,
  Output,
  SwapAddress,
  Garbage,
  Unused,
};

const char* to_string(QubitRole role);

struct Circuit {
  std::uint32_t qubit_count = 0;
  std::vector<Gate> gates;
  // Either empty or one role per qubit.
  std::vector<QubitRole> roles;

  void add(Gate g) { gates.push_back(std::move(g)); }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRangeQubit : Error {
  using Error::Error;
};
struct DuplicateOperand : Error {
  using Error::Error;
};
struct BadOperandCount : Error {
  using Error::Error;
};
struct BadRoleVector : Error {
  using Error::Error;
};
struct EmptyTargets : Error {
  using Error::Error;
};
struct OverlappingPairs : Error {
  using Error::Error;
};
struct InsufficientAncillas : Error {
  using Error::Error;
};
struct WidthTooSmall : Error {
  using Error::Error;
};
struct InvalidAlpha : Error {
  using Error::Error;
};
struct TableTooLarge : Error {
  using Error::Error;
};
struct InvalidSwapCount : Error {
  using Error::Error;
};
struct NonPermutationGate : Error {
  using Error::Error;
};
struct TooManyQubits : Error {
  using Error::Error;
};
struct UnloweredMacro : Error {
  using Error::Error;
};
struct UnplacedQubit : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Throws if any gate has a wrong operand count, an out-of-range qubit id, or
// repeated operands, or if the role vector has the wrong length.
void validate(const Circuit& circuit);

}  // namespace qactiv
