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
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qactiv/circuit_json.hpp"
#include "qactiv/gates.hpp"
#include "qactiv/grid.hpp"
#include "qactiv/leaky.hpp"
#include "qactiv/lower.hpp"
#include "qactiv/qasm.hpp"
#include "qactiv/relu.hpp"

namespace qactiv {
namespace {

struct QasmGate {
  std::string name;
  std::vector<std::uint32_t> operands;
};

struct ParsedQasm {
  std::uint32_t qubits = 0;
  std::vector<QasmGate> gates;
};

// Strict line-oriented reader for the dialect the exporter promises: a fixed
// three-line header, then one gate per line with distinct in-range operands.
ParsedQasm parse_qasm(const std::string& text) {
  static const std::map<std::string, std::size_t> arity = {
      {"h", 1},  {"s", 1},    {"sdg", 1},  {"t", 1},   {"tdg", 1}, {"x", 1},
      {"z", 1},  {"cx", 2},   {"swap", 2}, {"ccx", 3}, {"cswap", 3}};
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    lines.push_back(line);
  }
  REQUIRE(!text.empty());
  REQUIRE(text.back() == '\n');
  REQUIRE(lines.size() >= 3);
  REQUIRE(lines[0] == "OPENQASM 2.0;");
  REQUIRE(lines[1] == "include \"qelib1.inc\";");

  ParsedQasm out;
  {
    std::istringstream qr(lines[2]);
    std::string kw;
    char c;
    qr >> kw;
    REQUIRE(kw == "qreg");
    REQUIRE((qr >> c && c == 'q'));
    REQUIRE((qr >> c && c == '['));
    REQUIRE(static_cast<bool>(qr >> out.qubits));
    REQUIRE((qr >> c && c == ']'));
    REQUIRE((qr >> c && c == ';'));
  }
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const std::string& g = lines[i];
    std::size_t sp = g.find(' ');
    REQUIRE(sp != std::string::npos);
    QasmGate gate;
    gate.name = g.substr(0, sp);
    REQUIRE(arity.count(gate.name) == 1);
    REQUIRE(g.back() == ';');
    std::string rest = g.substr(sp + 1, g.size() - sp - 2);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      REQUIRE(rest.compare(pos, 2, "q[") == 0);
      pos += 2;
      std::size_t close = rest.find(']', pos);
      REQUIRE(close != std::string::npos);
      gate.operands.push_back(
          static_cast<std::uint32_t>(std::stoul(rest.substr(pos, close - pos))));
      pos = close + 1;
      if (pos < rest.size()) {
        REQUIRE(rest[pos] == ',');
        ++pos;
        REQUIRE(pos < rest.size());
      }
    }
    REQUIRE(gate.operands.size() == arity.at(gate.name));
    std::set<std::uint32_t> distinct(gate.operands.begin(),
                                     gate.operands.end());
    REQUIRE(distinct.size() == gate.operands.size());
    for (std::uint32_t q : gate.operands) {
      REQUIRE(q < out.qubits);
    }
    out.gates.push_back(std::move(gate));
  }
  return out;
}

bool uses_only(const ParsedQasm& p, const std::set<std::string>& names) {
  for (const QasmGate& g : p.gates) {
    if (names.count(g.name) == 0) {
      return false;
    }
  }
  return true;
}

TEST_CASE("macro exports parse and stay inside the qelib1 vocabulary") {
  Circuit relu = build_relu(6);
  ParsedQasm p = parse_qasm(export_qasm(relu));
  CHECK(p.qubits == relu.qubit_count);
  CHECK(p.gates.size() == relu.gates.size());
  bool has_ccx = false;
  for (const QasmGate& g : p.gates) {
    has_ccx = has_ccx || g.name == "ccx";
  }
  CHECK(has_ccx);

  LeakySpec spec;
  spec.n = 6;
  spec.alpha_log2 = 3;
  spec.encoding = SignEncoding::TwosComplement;
  Circuit leaky = build_leaky_relu(spec);
  ParsedQasm pl = parse_qasm(export_qasm(leaky));
  CHECK(pl.qubits == leaky.qubit_count);
}

TEST_CASE("lowered exports use the Clifford+T basis only") {
  const std::set<std::string> basis = {"h", "s", "sdg", "t", "tdg", "cx"};
  for (Circuit c : {build_relu(6), build_relu_grid(8)}) {
    LoweredCircuit lc = lower(c);
    ParsedQasm p = parse_qasm(export_qasm(lc));
    CHECK(p.qubits == lc.qubit_count);
    CHECK(p.gates.size() == lc.gates.size());
    CHECK(uses_only(p, basis));
  }
}

TEST_CASE("phase powers expand into t, s and z lines") {
  Circuit c;
  c.qubit_count = 1;
  c.gates.push_back(Gate::phase_power(0, 5));
  CHECK(export_qasm(c) ==
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\n"
        "t q[0];\nz q[0];\n");
  c.gates[0] = Gate::phase_power(0, 0);
  CHECK(export_qasm(c) == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\n");
  c.gates[0] = Gate::phase_power(0, -1);
  CHECK(export_qasm(c) ==
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\n"
        "t q[0];\ns q[0];\nz q[0];\n");
  c.gates[0] = Gate::phase_power(0, 6);
  ParsedQasm p = parse_qasm(export_qasm(c));
  REQUIRE(p.gates.size() == 2);
  CHECK(p.gates[0].name == "s");
  CHECK(p.gates[1].name == "z");
}

TEST_CASE("circuit documents carry the declared schema") {
  Circuit c = build_relu(4);
  nlohmann::json doc = circuit_to_json(c);
  CHECK(doc.at("format") == "qactiv-circuit");
  CHECK(doc.at("version") == 1);
  CHECK(doc.at("qubit_count") == c.qubit_count);
  REQUIRE(doc.contains("roles"));
  REQUIRE(doc.at("roles").size() == c.qubit_count);
  CHECK(doc.at("roles")[0] == "input");
  CHECK(doc.at("roles")[c.qubit_count - 1] == "output");
  REQUIRE(doc.at("gates").is_array());
  REQUIRE(!doc.at("gates").empty());
  CHECK(doc.at("gates")[0].at("kind") == "x");
  CHECK(doc.at("gates")[0].at("operands") == nlohmann::json::array({0}));
  for (const auto& jg : doc.at("gates")) {
    CHECK(jg.contains("param") == (jg.at("kind") == "phase_power"));
  }
}

TEST_CASE("grid circuits keep the unused role in their documents") {
  Circuit c = build_relu_grid(8);
  nlohmann::json doc = circuit_to_json(c);
  std::set<std::string> seen;
  for (const auto& jr : doc.at("roles")) {
    seen.insert(jr.get<std::string>());
  }
  CHECK(seen ==
        std::set<std::string>{"input", "output", "unused"});
}

TEST_CASE("json round trips reproduce the circuit") {
  LeakySpec spec;
  spec.n = 5;
  spec.alpha_log2 = 4;
  Circuit synthetic;
  synthetic.qubit_count = 6;
  synthetic.gates = {Gate::h(0),
                     Gate::s(1),
                     Gate::sdg(2),
                     Gate::t(3),
                     Gate::tdg(4),
                     Gate::cnot(0, 1),
                     Gate::x(5),
                     Gate::swap(2, 3),
                     Gate::toffoli(0, 1, 2),
                     Gate::multi_controlled_x({0, 1, 2, 3}, 4),
                     Gate::cswap(5, 0, 1),
                     Gate::phase_power(3, 5),
                     Gate::phase_power(2, -3)};
  for (const Circuit& c : {build_relu(4), build_leaky_relu(spec),
                           build_relu_grid(8), synthetic}) {
    nlohmann::json doc = circuit_to_json(c);
    Circuit back = circuit_from_json(doc);
    CHECK(back.qubit_count == c.qubit_count);
    CHECK(back.roles == c.roles);
    REQUIRE(back.gates.size() == c.gates.size());
    CHECK(circuit_to_json(back) == doc);
    // Text round trip as well, since the CLI ships these as files.
    Circuit again = circuit_from_json(nlohmann::json::parse(doc.dump(2)));
    CHECK(circuit_to_json(again) == doc);
  }
}

TEST_CASE("malformed circuit documents are rejected") {
  CHECK_THROWS_AS(circuit_from_json(nlohmann::json::array()), ParseError);
  CHECK_THROWS_AS(circuit_from_json(nlohmann::json::object()), ParseError);
  nlohmann::json doc;
  doc["format"] = "qactiv-circuit";
  doc["version"] = 1;
  doc["qubit_count"] = 2;
  CHECK_THROWS_AS(circuit_from_json(doc), ParseError);  // no gates array
  doc["gates"] = nlohmann::json::array();
  CHECK_NOTHROW(circuit_from_json(doc));

  nlohmann::json bad_kind = doc;
  bad_kind["gates"].push_back({{"kind", "ctrl_v"}, {"operands", {0}}});
  CHECK_THROWS_AS(circuit_from_json(bad_kind), ParseError);

  nlohmann::json bad_role = doc;
  bad_role["roles"] = {"input", "scratch"};
  CHECK_THROWS_AS(circuit_from_json(bad_role), ParseError);

  nlohmann::json dup = doc;
  dup["gates"].push_back({{"kind", "cnot"}, {"operands", {1, 1}}});
  CHECK_THROWS_AS(circuit_from_json(dup), DuplicateOperand);

  nlohmann::json oob = doc;
  oob["gates"].push_back({{"kind", "h"}, {"operands", {5}}});
  CHECK_THROWS_AS(circuit_from_json(oob), OutOfRangeQubit);

  nlohmann::json wrong_format = doc;
  wrong_format["format"] = "qactiv-layout";
  CHECK_THROWS_AS(circuit_from_json(wrong_format), ParseError);
}

}  // namespace
}  // namespace qactiv
