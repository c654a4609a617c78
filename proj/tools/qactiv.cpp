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

// qactiv: synthesize, analyze, simulate, verify and export Clifford+T
// circuits for neural-network activation functions.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qactiv/circuit_json.hpp"
#include "qactiv/equiv.hpp"
#include "qactiv/gates.hpp"
#include "qactiv/grid.hpp"
#include "qactiv/leaky.hpp"
#include "qactiv/lower.hpp"
#include "qactiv/minifloat.hpp"
#include "qactiv/qasm.hpp"
#include "qactiv/qlut.hpp"
#include "qactiv/relu.hpp"
#include "qactiv/schedule.hpp"
#include "qactiv/sim.hpp"
#include "qactiv/synthesis.hpp"

namespace {

using nlohmann::json;
using namespace qactiv;

std::filesystem::path resolve_out(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("QACTIV_OUT_DIR")) {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

// Empty or "-" means stdout.
void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') {
      std::cout << '\n';
    }
    return;
  }
  std::filesystem::path p = resolve_out(path);
  std::ofstream out(p);
  if (!out) {
    throw Error("cannot open output file: " + p.string());
  }
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open input file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Circuit load_circuit(const std::string& path) {
  return circuit_from_json(json::parse(read_text(path)));
}

// Flags shared by the circuit-producing verbs.
struct TargetFlags {
  std::uint32_t bits = 8;
  std::string layout = "flat";
  std::string alpha = "0.125";
  std::string encoding = "true";
  std::string fn = "sigmoid";
  std::string format = "f8";
  std::uint32_t swap_qubits = 1;
};

const std::map<std::string, std::uint32_t> kAlphaLog2 = {
    {"0.125", 3}, {"0.0625", 4}, {"0.03125", 5}, {"0.015625", 6}};

void add_relu_flags(CLI::App* cmd, TargetFlags& f) {
  cmd->add_option("--bits", f.bits, "input width n")->required();
  cmd->add_option("--layout", f.layout, "qubit connectivity (default flat)")
      ->check(CLI::IsMember({"flat", "grid"}));
}

void add_leaky_flags(CLI::App* cmd, TargetFlags& f) {
  cmd->add_option("--bits", f.bits, "input width n")->required();
  cmd->add_option("--alpha", f.alpha, "slope (default 0.125)")
      ->check(CLI::IsMember({"0.125", "0.0625", "0.03125", "0.015625"}));
  cmd->add_option("--encoding", f.encoding,
                  "output encoding: true (sign-magnitude) or twos "
                  "(default true)")
      ->check(CLI::IsMember({"true", "twos"}));
}

void add_qlut_flags(CLI::App* cmd, TargetFlags& f) {
  cmd->add_option("--fn", f.fn, "activation function (default sigmoid)")
      ->check(CLI::IsMember({"sigmoid", "tanh", "swish", "elu", "gelu"}));
  cmd->add_option("--format", f.format, "float format (default f8)")
      ->check(CLI::IsMember({"f8", "f16", "f32", "f64", "f128"}));
  cmd->add_option("--swap-qubits", f.swap_qubits,
                  "swap stages l, 1 <= l <= n-1 (default 1)");
}

LeakySpec leaky_spec(const TargetFlags& f) {
  LeakySpec spec;
  spec.n = f.bits;
  spec.alpha_log2 = kAlphaLog2.at(f.alpha);
  spec.encoding = f.encoding == "twos" ? SignEncoding::TwosComplement
                                       : SignEncoding::SignMagnitude;
  return spec;
}

LookupTable qlut_table(const TargetFlags& f) {
  auto fn = activation_from_name(f.fn);
  auto fmt = FloatFormat::from_name(f.format);
  if (!fn || !fmt) {
    throw Error("unknown activation or format");
  }
  return build_table(*fn, *fmt);
}

json metrics_to_json(const Metrics& m) {
  json doc;
  doc["qubit_count"] = m.qubit_count;
  doc["size"] = m.size;
  doc["depth"] = m.depth;
  doc["t_count"] = m.t_count;
  doc["t_depth"] = m.t_depth;
  return doc;
}

// Reads input bits into the given qubits (string position i drives
// input_qubits[i]) and returns the full-width start state.
BasisState start_state(std::uint32_t qubit_count,
                       const std::vector<QubitId>& input_qubits,
                       const std::string& bits) {
  if (bits.size() != input_qubits.size()) {
    throw Error("--input must have exactly " +
                std::to_string(input_qubits.size()) + " bits, got " +
                std::to_string(bits.size()));
  }
  BasisState state(qubit_count);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw Error("--input must be a 0/1 string");
    }
    state.set(input_qubits[i], bits[i] == '1');
  }
  return state;
}

// Input register: qubits the caller sets; output register: qubits printed.
struct Registers {
  std::vector<QubitId> inputs;
  std::vector<QubitId> outputs;
};

Registers registers_from_roles(const Circuit& c) {
  Registers r;
  if (c.roles.empty()) {
    for (QubitId q = 0; q < c.qubit_count; ++q) {
      r.inputs.push_back(q);
    }
    return r;
  }
  for (QubitId q = 0; q < c.qubit_count; ++q) {
    if (c.roles[q] == QubitRole::Input ||
        c.roles[q] == QubitRole::SwapAddress) {
      r.inputs.push_back(q);
    } else if (c.roles[q] == QubitRole::Output) {
      r.outputs.push_back(q);
    }
  }
  return r;
}

BasisState run_circuit(const Circuit& c, const BasisState& in,
                       const std::string& mode) {
  if (mode == "macro") {
    return simulate_macro(c, in);
  }
  LoweredCircuit low = lower(c);
  if (mode == "sparse") {
    SparseState state = simulate_sparse_exact(low, in);
    if (state.size() != 1 || state.begin()->second != ExactAmplitude::one()) {
      throw Error("final state is not a single basis state");
    }
    return state.begin()->first;
  }
  auto amps = simulate_statevector(low, in);
  std::size_t best = 0;
  for (std::size_t i = 1; i < amps.size(); ++i) {
    if (std::abs(amps[i]) > std::abs(amps[best])) {
      best = i;
    }
  }
  if (std::abs(amps[best]) < 0.99) {
    throw Error("final state is not a basis state");
  }
  return state_of_amp_index(c.qubit_count, best);
}

std::string bits_of(const BasisState& state, const std::vector<QubitId>& qs) {
  std::string out;
  for (QubitId q : qs) {
    out += state.get(q) ? '1' : '0';
  }
  return out;
}

int run_simulation(const Circuit& c, const Registers& regs,
                   const std::string& input, const std::string& mode,
                   bool full) {
  BasisState in = start_state(c.qubit_count, regs.inputs, input);
  BasisState out = run_circuit(c, in, mode);
  if (full || regs.outputs.empty()) {
    std::cout << out.str() << "\n";
  } else {
    std::cout << bits_of(out, regs.outputs) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
  std::string target;
  TargetFlags t;
  std::string circuit_file;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
};

FunctionalSpec relu_functional(std::uint32_t n, std::uint32_t qubit_count) {
  FunctionalSpec spec;
  spec.oracle = [](const BasisState& in) { return relu_reference(in); };
  for (QubitId q = 0; q < n; ++q) {
    spec.input_qubits.push_back(q);
  }
  for (QubitId q = n; q < 2 * n - 1; ++q) {
    spec.output_qubits.push_back(q);
  }
  for (QubitId q = 2 * n - 1; q < qubit_count; ++q) {
    spec.must_stay_zero.push_back(q);
  }
  return spec;
}

FunctionalSpec leaky_functional(const LeakySpec& ls) {
  FunctionalSpec spec;
  spec.oracle = [ls](const BasisState& in) {
    return leaky_relu_reference(ls, in);
  };
  for (QubitId q = 0; q < ls.n; ++q) {
    spec.input_qubits.push_back(q);
  }
  for (QubitId q = ls.n; q < ls.n + ls.output_bits(); ++q) {
    spec.output_qubits.push_back(q);
  }
  return spec;
}

FunctionalSpec qlut_functional(const LookupTable& table) {
  const std::uint32_t n = table.input_bits();
  FunctionalSpec spec;
  std::vector<std::uint32_t> entries = table.entries;
  spec.oracle = [entries, n](const BasisState& in) {
    return BasisState::from_uint(n, entries[in.to_uint()]);
  };
  for (QubitId q = 0; q < n; ++q) {
    spec.input_qubits.push_back(q);
    spec.output_qubits.push_back(n + q);
  }
  return spec;
}

json report_to_json(const std::string& target, const FunctionalReport& r) {
  json doc;
  doc["target"] = target;
  doc["ok"] = r.ok;
  doc["checked"] = r.checked;
  doc["exhaustive"] = r.exhaustive;
  doc["detail"] = r.detail;
  return doc;
}

int verify_gates() {
  json cases = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, const EquivResult& r) {
    json c;
    c["case"] = name;
    c["ok"] = r.equal;
    if (!r.equal) {
      c["detail"] = r.detail;
      all_ok = false;
    }
    cases.push_back(c);
  };

  {
    Circuit ref;
    ref.qubit_count = 3;
    ref.add(Gate::toffoli(0, 1, 2));
    record("toffoli",
           check_unitary_equiv(build_shared_control_toffoli_batch(
                                   3, 0, {ToffoliPair{1, 2}}),
                               ref));
  }
  for (std::uint32_t m = 1; m <= 4; ++m) {
    Circuit ref;
    ref.qubit_count = 2 * m + 1;
    std::vector<ToffoliPair> pairs;
    for (std::uint32_t i = 0; i < m; ++i) {
      pairs.push_back(ToffoliPair{2 * i + 1, 2 * i + 2});
      ref.add(Gate::toffoli(0, 2 * i + 1, 2 * i + 2));
    }
    record("toffoli_batch_m" + std::to_string(m),
           check_unitary_equiv(
               build_shared_control_toffoli_batch(2 * m + 1, 0, pairs), ref));
  }
  for (std::uint32_t m = 1; m <= 4; ++m) {
    Circuit ref;
    ref.qubit_count = 2 * m + 1;
    std::vector<SwapPair> pairs;
    for (std::uint32_t i = 0; i < m; ++i) {
      pairs.push_back(SwapPair{2 * i + 1, 2 * i + 2});
      ref.add(Gate::cswap(0, 2 * i + 1, 2 * i + 2));
    }
    record("cswap_batch_m" + std::to_string(m),
           check_unitary_equiv(build_cswap_batch(2 * m + 1, 0, pairs), ref));
  }
  for (std::uint32_t k = 3; k <= 5; ++k) {
    std::uint32_t qc = 2 * k - 1;
    std::vector<QubitId> controls, dirty;
    for (std::uint32_t i = 0; i < k; ++i) {
      controls.push_back(i);
    }
    for (std::uint32_t i = k + 1; i < qc; ++i) {
      dirty.push_back(i);
    }
    Circuit ref;
    ref.qubit_count = qc;
    ref.add(Gate::multi_controlled_x(controls, k));
    record("mcx_k" + std::to_string(k),
           check_unitary_equiv(
               build_multi_controlled_x(qc, controls, k, dirty), ref));
  }

  json doc;
  doc["target"] = "gates";
  doc["ok"] = all_ok;
  doc["cases"] = cases;
  std::cout << doc.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int run_verify(const VerifyFlags& vf) {
  if (vf.target == "gates") {
    return verify_gates();
  }

  Circuit circuit;
  FunctionalSpec spec;
  if (vf.target == "relu") {
    circuit = vf.t.layout == "grid" ? build_relu_grid(vf.t.bits)
                                    : build_relu(vf.t.bits);
    spec = relu_functional(vf.t.bits, circuit.qubit_count);
  } else if (vf.target == "leaky-relu") {
    LeakySpec ls = leaky_spec(vf.t);
    circuit = build_leaky_relu(ls);
    spec = leaky_functional(ls);
  } else {
    LookupTable table = qlut_table(vf.t);
    circuit = build_qlut(table, vf.t.swap_qubits);
    spec = qlut_functional(table);
  }
  if (!vf.circuit_file.empty()) {
    circuit = load_circuit(vf.circuit_file);
  }
  if (vf.exhaustive) {
    spec.exhaustive_limit = 64;
  } else if (vf.samples > 0) {
    spec.exhaustive_limit = 0;
    spec.samples = vf.samples;
    spec.seed = vf.seed;
  }
  FunctionalReport report = verify_functional(circuit, spec);
  std::cout << report_to_json(vf.target, report).dump(2) << "\n";
  return report.ok ? 0 : 1;
}

// ------------------------------------------------------------- cost-table

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

int cost_table_relu(std::uint32_t bits, bool as_json, const std::string& out) {
  struct Row {
    const char* name;
    std::uint64_t t_depth;
  };
  std::vector<Row> rows;
  rows.push_back({"relu", compute_metrics(lower(build_relu(bits))).t_depth});
  rows.push_back(
      {"relu_grid", compute_metrics(lower(build_relu_grid(bits))).t_depth});
  LeakySpec ls;
  ls.n = bits;
  rows.push_back(
      {"leaky_relu", compute_metrics(lower(build_leaky_relu(ls))).t_depth});

  std::ostringstream text;
  if (as_json) {
    json doc = json::array();
    for (const Row& r : rows) {
      doc.push_back({{"activation", r.name}, {"t_depth", r.t_depth}});
    }
    text << doc.dump(2) << "\n";
  } else {
    text << "activation,t_depth\n";
    for (const Row& r : rows) {
      text << r.name << "," << r.t_depth << "\n";
    }
  }
  write_text(out, text.str());
  return 0;
}

int cost_table_qlut(const std::string& formats, bool as_json,
                    const std::string& out) {
  std::ostringstream text;
  json doc = json::array();
  if (!as_json) {
    text << "n,l,ancilla,t_depth\n";
  }
  for (const std::string& name : split_list(formats)) {
    auto fmt = FloatFormat::from_name(name);
    if (!fmt) {
      throw Error("unknown float format: " + name);
    }
    const std::uint32_t n = fmt->width();
    for (std::uint32_t j = 1; j <= 7; ++j) {
      const std::uint32_t l = n / 8 * j;
      QlutCost cost = qlut_cost(n, l);
      if (as_json) {
        doc.push_back({{"n", n},
                       {"l", l},
                       {"ancilla", u128_to_string(cost.ancillas)},
                       {"t_depth", u128_to_string(cost.t_depth)}});
      } else {
        text << n << "," << l << "," << u128_to_string(cost.ancillas) << ","
             << u128_to_string(cost.t_depth) << "\n";
      }
    }
  }
  if (as_json) {
    text << doc.dump(2) << "\n";
  }
  write_text(out, text.str());
  return 0;
}

// --------------------------------------------------------- table dumping

std::string dump_table(const LookupTable& table, bool hex) {
  const std::uint32_t n = table.input_bits();
  std::ostringstream out;
  for (std::size_t x = 0; x < table.entries.size(); ++x) {
    if (hex) {
      out << std::hex << std::setw((n + 3) / 4) << std::setfill('0') << x
          << " " << std::setw((n + 3) / 4) << std::setfill('0')
          << table.entries[x] << std::dec << "\n";
    } else {
      out << BasisState::from_uint(n, x).str() << " "
          << BasisState::from_uint(n, table.entries[x]).str() << "\n";
    }
  }
  return out.str();
}

std::string layout_json(const GridLayout& layout) {
  json doc;
  doc["side"] = layout.side();
  doc["qubit_count"] = layout.qubit_count();
  json cells = json::array();
  for (QubitId q = 0; q < layout.qubit_count(); ++q) {
    GridCoord c = layout.cell_of(q);
    cells.push_back({c.row, c.col});
  }
  doc["cells"] = cells;
  return doc.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Clifford+T circuits for neural-network activation functions"};
  app.require_subcommand(1);
  app.fallthrough();

  // synth
  auto* synth = app.add_subcommand("synth", "build a circuit artifact");
  synth->require_subcommand(1);
  std::string synth_out;
  bool synth_qasm = false, synth_lower = false;
  synth->add_option("-o,--output", synth_out, "output file (default stdout)");
  synth->add_flag("--qasm", synth_qasm, "emit OpenQASM 2.0 instead of JSON");
  synth->add_flag("--lower", synth_lower,
                  "lower to {H,S,Sdg,T,Tdg,CNOT} before export");

  TargetFlags synth_flags;
  auto* synth_relu = synth->add_subcommand("relu", "ReLU circuit");
  add_relu_flags(synth_relu, synth_flags);
  std::string layout_out;
  synth_relu->add_option("--layout-out", layout_out,
                         "write the grid layout (qubit -> [row, col]) here");
  auto* synth_leaky = synth->add_subcommand("leaky-relu", "Leaky ReLU circuit");
  add_leaky_flags(synth_leaky, synth_flags);
  auto* synth_qlut =
      synth->add_subcommand("qlut", "lookup-table activation circuit");
  add_qlut_flags(synth_qlut, synth_flags);
  std::string dump_table_out;
  bool dump_hex = false;
  synth_qlut->add_option("--dump-table", dump_table_out,
                         "also write the lookup table as text lines");
  synth_qlut->add_flag("--hex", dump_hex, "hex table lines instead of binary");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "metrics of an artifact");
  std::string analyze_in, analyze_layout;
  analyze->add_option("-i,--input", analyze_in, "circuit JSON file")
      ->required();
  analyze->add_option("--layout", analyze_layout,
                      "grid layout JSON; adds a connectivity check");

  // simulate
  auto* simulate =
      app.add_subcommand("simulate", "map an input bitstring to the output");
  std::string sim_in, sim_input, sim_mode = "macro";
  bool sim_full = false;
  simulate->add_option("-i,--input-file", sim_in, "circuit JSON file");
  simulate->add_option("--input", sim_input, "input register bits")
      ->required();
  simulate->add_option("--mode", sim_mode, "macro | sparse | dense")
      ->check(CLI::IsMember({"macro", "sparse", "dense"}));
  simulate->add_flag("--full", sim_full, "print the full final state");
  TargetFlags sim_flags;
  auto* sim_relu = simulate->add_subcommand("relu", "simulate a ReLU circuit");
  add_relu_flags(sim_relu, sim_flags);
  auto* sim_leaky =
      simulate->add_subcommand("leaky-relu", "simulate a Leaky ReLU circuit");
  add_leaky_flags(sim_leaky, sim_flags);
  auto* sim_qlut =
      simulate->add_subcommand("qlut", "simulate a lookup-table circuit");
  add_qlut_flags(sim_qlut, sim_flags);
  simulate->require_subcommand(0, 1);

  // verify
  auto* verify = app.add_subcommand("verify", "check circuits against oracles");
  VerifyFlags vf;
  verify->add_option("--target", vf.target, "relu | leaky-relu | qlut | gates")
      ->required()
      ->check(CLI::IsMember({"relu", "leaky-relu", "qlut", "gates"}));
  verify->add_option("--bits", vf.t.bits, "input width n (default 8)");
  verify->add_option("--layout", vf.t.layout, "relu connectivity")
      ->check(CLI::IsMember({"flat", "grid"}));
  verify->add_option("--alpha", vf.t.alpha, "leaky-relu slope")
      ->check(CLI::IsMember({"0.125", "0.0625", "0.03125", "0.015625"}));
  verify->add_option("--encoding", vf.t.encoding, "leaky-relu encoding")
      ->check(CLI::IsMember({"true", "twos"}));
  verify->add_option("--fn", vf.t.fn, "qlut activation")
      ->check(CLI::IsMember({"sigmoid", "tanh", "swish", "elu", "gelu"}));
  verify->add_option("--format", vf.t.format, "qlut float format")
      ->check(CLI::IsMember({"f8", "f16", "f32", "f64", "f128"}));
  verify->add_option("--swap-qubits", vf.t.swap_qubits, "qlut swap stages");
  verify->add_option("-i,--input", vf.circuit_file,
                     "verify this artifact instead of a fresh synthesis");
  bool vf_exhaustive = false;
  verify->add_flag("--exhaustive", vf_exhaustive,
                   "force exhaustive enumeration");
  verify->add_option("--samples", vf.samples, "random sample count");
  verify->add_option("--seed", vf.seed, "sample seed");

  // cost-table
  auto* cost = app.add_subcommand("cost-table", "resource tables");
  bool cost_relu = false, cost_qlut = false, cost_json = false;
  std::string cost_fn = "any", cost_formats = "f8,f16,f32,f64,f128";
  std::string cost_out;
  std::uint32_t cost_bits = 8;
  cost->add_flag("--relu", cost_relu, "measured T-depth of the ReLU family");
  cost->add_flag("--qlut", cost_qlut,
                 "lookup-table cost model (the default table)");
  cost->add_option("--fn", cost_fn, "activation (cost is fn-independent)")
      ->check(CLI::IsMember(
          {"any", "sigmoid", "tanh", "swish", "elu", "gelu"}));
  cost->add_option("--formats", cost_formats, "comma list of float formats");
  cost->add_option("--bits", cost_bits, "input width for --relu (default 8)");
  cost->add_flag("--json", cost_json, "JSON rows instead of CSV");
  cost->add_option("-o,--output", cost_out, "output file (default stdout)");

  // export
  auto* export_cmd = app.add_subcommand("export", "emit OpenQASM 2.0");
  std::string export_in, export_out;
  bool export_lower = false;
  export_cmd->add_option("-i,--input", export_in, "circuit JSON file")
      ->required();
  export_cmd->add_option("-o,--output", export_out,
                         "output file (default stdout)");
  export_cmd->add_flag("--lower", export_lower,
                       "lower to {H,S,Sdg,T,Tdg,CNOT} first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  vf.exhaustive = vf_exhaustive;

  try {
    if (synth->parsed()) {
      Circuit circuit;
      if (synth_relu->parsed()) {
        if (synth_flags.layout == "grid") {
          GridLayout layout = GridLayout::for_relu(synth_flags.bits);
          circuit = build_relu_grid(synth_flags.bits);
          if (!layout_out.empty()) {
            write_text(layout_out, layout_json(layout));
          }
        } else {
          circuit = build_relu(synth_flags.bits);
        }
      } else if (synth_leaky->parsed()) {
        circuit = build_leaky_relu(leaky_spec(synth_flags));
      } else {
        LookupTable table = qlut_table(synth_flags);
        circuit = build_qlut(table, synth_flags.swap_qubits);
        if (!dump_table_out.empty()) {
          write_text(dump_table_out, dump_table(table, dump_hex));
        }
      }
      std::string text;
      if (synth_qasm) {
        text = synth_lower ? export_qasm(lower(circuit)) : export_qasm(circuit);
      } else {
        text = circuit_to_json(circuit).dump(2) + "\n";
      }
      write_text(synth_out, text);
      return 0;
    }

    if (analyze->parsed()) {
      Circuit circuit = load_circuit(analyze_in);
      json doc = metrics_to_json(compute_metrics(lower(circuit)));
      if (!analyze_layout.empty()) {
        json layout = json::parse(read_text(analyze_layout));
        const auto& cells = layout.at("cells");
        std::uint64_t violations = 0;
        for (const Gate& g : circuit.gates) {
          for (std::size_t i = 0; i < g.operands.size(); ++i) {
            for (std::size_t j = i + 1; j < g.operands.size(); ++j) {
              const auto& a = cells.at(g.operands[i]);
              const auto& b = cells.at(g.operands[j]);
              long dr = static_cast<long>(a.at(0).get<std::uint32_t>()) -
                        static_cast<long>(b.at(0).get<std::uint32_t>());
              long dc = static_cast<long>(a.at(1).get<std::uint32_t>()) -
                        static_cast<long>(b.at(1).get<std::uint32_t>());
              if (std::labs(dr) + std::labs(dc) != 1) {
                ++violations;
              }
            }
          }
        }
        doc["connectivity_ok"] = violations == 0;
        doc["connectivity_violations"] = violations;
      }
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (simulate->parsed()) {
      Circuit circuit;
      Registers regs;
      if (sim_relu->parsed()) {
        circuit = sim_flags.layout == "grid" ? build_relu_grid(sim_flags.bits)
                                             : build_relu(sim_flags.bits);
      } else if (sim_leaky->parsed()) {
        circuit = build_leaky_relu(leaky_spec(sim_flags));
      } else if (sim_qlut->parsed()) {
        circuit = build_qlut(qlut_table(sim_flags), sim_flags.swap_qubits);
      } else if (!sim_in.empty()) {
        circuit = load_circuit(sim_in);
      } else {
        std::cerr << "simulate needs a target subcommand or -i FILE\n";
        return 2;
      }
      regs = registers_from_roles(circuit);
      return run_simulation(circuit, regs, sim_input, sim_mode, sim_full);
    }

    if (verify->parsed()) {
      return run_verify(vf);
    }

    if (cost->parsed()) {
      if (cost_relu && cost_qlut) {
        std::cerr << "pass at most one of --relu and --qlut\n";
        return 2;
      }
      if (cost_relu) {
        return cost_table_relu(cost_bits, cost_json, cost_out);
      }
      return cost_table_qlut(cost_formats, cost_json, cost_out);
    }

    if (export_cmd->parsed()) {
      Circuit circuit = load_circuit(export_in);
      std::string text =
          export_lower ? export_qasm(lower(circuit)) : export_qasm(circuit);
      write_text(export_out, text);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
