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

#include "qactiv/circuit_json.hpp"

#include <array>
#include <string>

namespace qactiv {

namespace {

constexpr std::array<GateKind, 12> kAllKinds = {
    GateKind::H,       GateKind::S,          GateKind::Sdg,
    GateKind::T,       GateKind::Tdg,        GateKind::CNOT,
    GateKind::X,       GateKind::Swap,       GateKind::Toffoli,
    GateKind::MultiControlledX, GateKind::CSwap, GateKind::PhasePower,
};

constexpr std::array<QubitRole, 5> kAllRoles = {
    QubitRole::Input, QubitRole::Output, QubitRole::SwapAddress,
    QubitRole::Garbage, QubitRole::Unused,
};

GateKind kind_from_name(const std::string& name) {
  for (GateKind k : kAllKinds) {
    if (name == to_string(k)) {
      return k;
    }
  }
  throw ParseError("unknown gate kind \"" + name + "\"");
}

QubitRole role_from_name(const std::string& name) {
  for (QubitRole r : kAllRoles) {
    if (name == to_string(r)) {
      return r;
    }
  }
  throw ParseError("unknown qubit role \"" + name + "\"");
}

}  // namespace

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json doc;
  doc["format"] = "qactiv-circuit";
  doc["version"] = 1;
  doc["qubit_count"] = circuit.qubit_count;
  if (!circuit.roles.empty()) {
    nlohmann::json roles = nlohmann::json::array();
    for (QubitRole r : circuit.roles) {
      roles.push_back(to_string(r));
    }
    doc["roles"] = std::move(roles);
  }
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : circuit.gates) {
    nlohmann::json jg;
    jg["kind"] = to_string(g.kind);
    jg["operands"] = g.operands;
    if (g.kind == GateKind::PhasePower) {
      jg["param"] = g.param;
    }
    gates.push_back(std::move(jg));
  }
  doc["gates"] = std::move(gates);
  return doc;
}

Circuit circuit_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) {
      throw ParseError("circuit document must be a JSON object");
    }
    if (doc.value("format", std::string()) != "qactiv-circuit") {
      throw ParseError("missing or wrong \"format\" field");
    }
    Circuit c;
    c.qubit_count = doc.at("qubit_count").get<std::uint32_t>();
    if (doc.contains("roles")) {
      for (const auto& jr : doc.at("roles")) {
        c.roles.push_back(role_from_name(jr.get<std::string>()));
      }
    }
    for (const auto& jg : doc.at("gates")) {
      Gate g;
      g.kind = kind_from_name(jg.at("kind").get<std::string>());
      g.operands = jg.at("operands").get<std::vector<QubitId>>();
      g.param = jg.value("param", 0);
      c.gates.push_back(std::move(g));
    }
    validate(c);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed circuit document: ") + e.what());
  }
}

}  // namespace qactiv
