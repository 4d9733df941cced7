// Copyright 2026 The mbqc Authors
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
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbqc/gadgets.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/policy.hpp"
#include "mbqc/rewrite.hpp"
#include "mbqc/scheduler.hpp"
#include "mbqc/statevector.hpp"
#include "mbqc/tableau.hpp"
#include "mbqc/verification.hpp"

using json = nlohmann::ordered_json;

namespace {

// Exit codes are a stable contract: 0 success, 1 verification failure,
// 2 input error.
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kInputError = 2;

// The two-ancilla frame walkthrough at all-plus outcomes, as printed by the
// tableau renderer. Embedded verbatim so drift in the renderer or in the
// procedure itself fails this command rather than silently reformatting.
const char* const kGoldenBlocks[] = {
    "At start\n"
    "S:\n"
    "  +IXZI\n"
    "  +IZXI\n"
    "tracked:\n"
    "  X_1: +XIII\n"
    "  Z_1: +ZIII\n"
    "  X_4: +IIIX\n"
    "  Z_4: +IIIZ\n",

    "1a) Measure ZXII\n"
    "S:\n"
    "  +IXZI\n"
    "  +ZXII\n"
    "tracked:\n"
    "  X_1: +XZXI\n"
    "  Z_1: +ZIII\n"
    "  X_4: +IIIX\n"
    "  Z_4: +IIIZ\n",

    "1b) Measure IIXZ\n"
    "S:\n"
    "  +IIXZ\n"
    "  +ZXII\n"
    "tracked:\n"
    "  X_1: +XZXI\n"
    "  Z_1: +ZIII\n"
    "  X_4: +IXZX\n"
    "  Z_4: +IIIZ\n",

    "2a) Measure IZII\n"
    "S:\n"
    "  +IIXZ\n"
    "  +IZII\n"
    "tracked:\n"
    "  X_1: +XZXI\n"
    "  Z_1: +ZIII\n"
    "  X_4: +ZIZX\n"
    "  Z_4: +IIIZ\n",

    "2b) Measure IIZI\n"
    "S:\n"
    "  +IIZI\n"
    "  +IZII\n"
    "tracked:\n"
    "  X_1: +XIIZ\n"
    "  Z_1: +ZIII\n"
    "  X_4: +ZIIX\n"
    "  Z_4: +IIIZ\n",
};

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Writes the command's primary payload to the chosen destination.
int emit(const std::string& text, const std::string& output) {
  if (output == "-" || output == "stdout") {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << output << "\n";
    return kInputError;
  }
  f << text;
  return kOk;
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    ok = false;
    return {};
  }
  std::ostringstream os;
  os << f.rdbuf();
  ok = true;
  return os.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream is(text);
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

int cmd_verify(const std::string& suite, double tol, uint64_t seed,
               const std::string& format, const std::string& output) {
  std::vector<mbqc::VerifySuite> suites;
  if (suite == "all") {
    suites = mbqc::verify_all(tol, seed);
  } else if (suite == "patterns") {
    suites.push_back(mbqc::verify_patterns(tol));
  } else if (suite == "gadgets") {
    suites.push_back(mbqc::verify_gadgets(tol, seed));
  } else if (suite == "mapping") {
    suites.push_back(mbqc::verify_mapping(tol));
  } else {
    suites.push_back(mbqc::verify_scheduler(seed));
  }

  bool all_pass = true;
  unsigned total = 0, passed = 0;
  for (const auto& s : suites) {
    all_pass = all_pass && s.pass();
    for (const auto& c : s.checks) {
      ++total;
      if (c.pass) ++passed;
    }
  }

  std::string payload;
  if (format == "json") {
    json j;
    j["seed"] = seed;
    j["tolerance"] = tol;
    j["pass"] = all_pass;
    j["suites"] = json::array();
    for (const auto& s : suites) {
      json js;
      js["name"] = s.name;
      js["pass"] = s.pass();
      js["checks"] = json::array();
      for (const auto& c : s.checks) {
        js["checks"].push_back({{"name", c.name},
                                {"pass", c.pass},
                                {"branches", c.branches},
                                {"worst_fidelity_deficit", c.worst_fidelity_deficit},
                                {"detail", c.detail}});
      }
      j["suites"].push_back(std::move(js));
    }
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "seed " << seed << "\n";
    os << "tolerance " << sci(tol) << "\n";
    for (const auto& s : suites) {
      os << "suite " << s.name << "\n";
      for (const auto& c : s.checks) {
        os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left
           << std::setw(26) << c.name << "  branches " << std::setw(5)
           << c.branches << "  worst fidelity deficit "
           << sci(c.worst_fidelity_deficit);
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
      }
    }
    os << "result: " << (all_pass ? "PASS" : "FAIL") << " (" << passed << "/"
       << total << " checks)\n";
    payload = os.str();
  }
  int code = emit(payload, output);
  if (code != kOk) return code;
  return all_pass ? kOk : kVerifyFail;
}

int cmd_table1(const std::string& format, const std::string& output) {
  std::vector<std::string> blocks = mbqc::frame_walkthrough_blocks();
  std::string rendered;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) rendered += "\n";
    rendered += blocks[i];
  }
  std::string golden;
  for (std::size_t i = 0; i < std::size(kGoldenBlocks); ++i) {
    if (i) golden += "\n";
    golden += kGoldenBlocks[i];
  }
  const bool match = rendered == golden;

  if (format == "json") {
    json j;
    j["blocks"] = blocks;
    j["match"] = match;
    int code = emit(j.dump(2) + "\n", output);
    if (code != kOk) return code;
  } else {
    int code = emit(rendered, output);
    if (code != kOk) return code;
  }
  if (!match) {
    std::vector<std::string> got = split_lines(rendered);
    std::vector<std::string> want = split_lines(golden);
    std::cerr << "walkthrough deviates from the embedded table:\n";
    for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
      const std::string g = i < got.size() ? got[i] : "<missing>";
      const std::string w = i < want.size() ? want[i] : "<missing>";
      if (g != w) {
        std::cerr << "line " << i + 1 << ": expected \"" << w << "\", got \""
                  << g << "\"\n";
      }
    }
    return kVerifyFail;
  }
  return kOk;
}

int cmd_schedule(const std::string& graph_file, const std::string& proc,
                 bool execute, uint64_t seed, const std::string& format,
                 const std::string& output) {
  bool ok = false;
  std::string text = read_file(graph_file, ok);
  if (!ok) {
    std::cerr << "cannot read graph file: " << graph_file << "\n";
    return kInputError;
  }
  mbqc::Graph g;
  try {
    g = mbqc::Graph::parse(text);
  } catch (const std::exception& e) {
    std::cerr << "graph parse error: " << e.what() << "\n";
    return kInputError;
  }
  mbqc::MeasurementSchedule sched;
  try {
    sched = mbqc::build_schedule(g, proc[0]);
  } catch (const std::exception& e) {
    std::cerr << "cannot schedule this graph: " << e.what() << "\n";
    return kInputError;
  }

  if (!execute) {
    if (format == "json") return emit(sched.to_json() + "\n", output);
    std::ostringstream os;
    os << sched.to_json() << "\n";
    os << "depth " << sched.depth << " (" << sched.rounds.size()
       << " pair rounds + 1 readout round)\n";
    return emit(os.str(), output);
  }

  mbqc::OutcomePolicy policy = mbqc::OutcomePolicy::sample(seed);
  std::string failure;
  bool pass = false;
  std::vector<std::string> log;
  std::string corrections;
  try {
    mbqc::ScheduleExecution ex = mbqc::execute_schedule(sched, policy);
    log = ex.log;
    corrections = ex.corrections.str();
    ex.tableau.apply_pauli(ex.corrections);
    mbqc::StabilizerTableau want = mbqc::StabilizerTableau::from_graph(g);
    pass = true;
    for (unsigned i = 0; i < want.num_stabilizers(); ++i) {
      if (ex.tableau.stabilizer(i).str() != want.stabilizer(i).str()) {
        pass = false;
        failure = "stabilizer " + std::to_string(i) + " is " +
                  ex.tableau.stabilizer(i).str() + ", want " +
                  want.stabilizer(i).str();
        break;
      }
    }
  } catch (const std::exception& e) {
    failure = e.what();
  }

  if (format == "json") {
    json j;
    j["schedule"] = json::parse(sched.to_json());
    j["seed"] = seed;
    j["log"] = log;
    j["corrections"] = corrections;
    j["graph_state_check"] = pass ? "PASS" : "FAIL";
    if (!pass) j["failure"] = failure;
    int code = emit(j.dump(2) + "\n", output);
    if (code != kOk) return code;
  } else {
    std::ostringstream os;
    os << sched.to_json() << "\n";
    os << "seed " << seed << "\n";
    for (const auto& line : log) os << line << "\n";
    os << "corrections: " << corrections << "\n";
    os << "graph-state check: " << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) os << "failure: " << failure << "\n";
    int code = emit(os.str(), output);
    if (code != kOk) return code;
  }
  return pass ? kOk : kVerifyFail;
}

int cmd_run_pattern(const std::string& pattern_file, std::string input,
                    uint64_t seed, const std::string& format,
                    const std::string& output) {
  bool ok = false;
  std::string text = read_file(pattern_file, ok);
  if (!ok) {
    std::cerr << "cannot read pattern file: " << pattern_file << "\n";
    return kInputError;
  }
  mbqc::Pattern p;
  try {
    p = mbqc::Pattern::from_json(text);
  } catch (const std::exception& e) {
    std::cerr << "pattern parse error: " << e.what() << "\n";
    return kInputError;
  }
  const unsigned wires = static_cast<unsigned>(p.inputs.size());
  if (input.empty()) input.assign(wires, '+');
  if (input.size() != wires) {
    std::cerr << "input needs one of 0/1/+/- per wire (the pattern has "
              << wires << ")\n";
    return kInputError;
  }
  mbqc::StateVector in(wires);
  for (unsigned w = 0; w < wires; ++w) {
    switch (input[w]) {
      case '0':
        break;
      case '1':
        in.apply_x(w);
        break;
      case '+':
        in.apply_h(w);
        break;
      case '-':
        in.apply_x(w);
        in.apply_h(w);
        break;
      default:
        std::cerr << "unknown input state '" << input[w] << "'\n";
        return kInputError;
    }
  }

  mbqc::OutcomePolicy policy = mbqc::OutcomePolicy::sample(seed);
  mbqc::PatternRun run = mbqc::run_pattern(p, in, policy);
  mbqc::Outcomes outcomes(run.outcomes.begin(), run.outcomes.end());
  mbqc::StateVector corrected = run.output;
  mbqc::apply_byproduct(corrected, p.byproduct, outcomes);

  const unsigned out_wires = corrected.num_qubits();
  auto basis_label = [&](std::size_t idx) {
    std::string s(out_wires, '0');
    for (unsigned w = 0; w < out_wires; ++w) {
      if (idx & (std::size_t{1} << (out_wires - 1 - w))) s[w] = '1';
    }
    return s;
  };

  if (format == "json") {
    json j;
    j["seed"] = seed;
    j["input"] = input;
    j["outcomes"] = json::object();
    for (const auto& [q, bit] : run.outcomes) {
      j["outcomes"][std::to_string(q)] = bit;
    }
    j["wires"] = out_wires;
    j["amplitudes"] = json::array();
    for (std::size_t i = 0; i < (std::size_t{1} << out_wires); ++i) {
      mbqc::Complex a = corrected.amplitude(i);
      j["amplitudes"].push_back({a.real(), a.imag()});
    }
    int code = emit(j.dump(2) + "\n", output);
    if (code != kOk) return code;
    return kOk;
  }
  std::ostringstream os;
  os << "seed " << seed << "\n";
  os << "input " << input << "\n";
  os << "outcomes:";
  for (const auto& [q, bit] : run.outcomes) os << " " << q << "=" << bit;
  os << "\n";
  os << "corrected output (" << out_wires << " wire"
     << (out_wires == 1 ? "" : "s") << "):\n";
  os << std::fixed << std::setprecision(6);
  for (std::size_t i = 0; i < (std::size_t{1} << out_wires); ++i) {
    mbqc::Complex a = corrected.amplitude(i);
    os << "  |" << basis_label(i) << ">  " << std::showpos << a.real()
       << a.imag() << std::noshowpos << "i\n";
  }
  return emit(os.str(), output);
}

int cmd_map(const std::string& name, double angle, double tol,
            const std::string& format, const std::string& output) {
  mbqc::RewriteTrace trace;
  mbqc::WireUnitary intended;
  if (name == "wire") {
    trace = mbqc::map_wire_to_teleportation();
    intended = mbqc::unitary_identity(1);
  } else if (name == "zrot") {
    trace = mbqc::map_rotation_to_generalized_bell('z', angle);
    intended = mbqc::unitary_zrot(angle);
  } else if (name == "xrot") {
    trace = mbqc::map_rotation_to_generalized_bell('x', angle);
    intended = mbqc::unitary_xrot(angle);
  } else if (name == "cnot-tqc-to-1wqc") {
    trace = mbqc::map_cnot_between_models(mbqc::MapDirection::TqcToOneWay);
    intended = mbqc::unitary_cnot();
  } else {
    trace = mbqc::map_cnot_between_models(mbqc::MapDirection::OneWayToTqc);
    intended = mbqc::unitary_cnot();
  }

  mbqc::TraceReport report = mbqc::validate_trace(trace, intended, tol);
  if (!report.ok) {
    std::cerr << "trace validation failed: " << report.failure << "\n";
    return kVerifyFail;
  }
  if (format == "json") {
    json j;
    j["trace"] = json::parse(trace.to_json());
    j["validation"] = {{"steps", report.steps},
                       {"branches", report.branches},
                       {"worst_fidelity_deficit", report.worst_fidelity_deficit}};
    return emit(j.dump(2) + "\n", output);
  }
  return emit(trace.to_json() + "\n", output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-way and teleportation-based measurement computing toolkit"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  double tolerance = 1e-10;
  std::string format = "text";
  std::string output = "-";
  const auto format_check = CLI::IsMember({"text", "json"});

  auto add_common = [&](CLI::App* cmd, bool with_seed, bool with_tol) {
    if (with_seed) {
      cmd->add_option("--seed", seed, "RNG seed (runs are replayable)")
          ->capture_default_str();
    }
    if (with_tol) {
      cmd->add_option("--tolerance", tolerance, "fidelity tolerance")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    }
    cmd->add_option("--format", format, "text or json")
        ->check(format_check)
        ->capture_default_str();
    cmd->add_option("--output", output, "output file, - for stdout")
        ->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string suite = "all";
  verify->add_option("--suite", suite, "all, patterns, gadgets, mapping, scheduler")
      ->check(CLI::IsMember({"all", "patterns", "gadgets", "mapping", "scheduler"}))
      ->capture_default_str();
  add_common(verify, true, true);

  auto* table1 = app.add_subcommand(
      "table1", "print the two-ancilla frame walkthrough and check it");
  add_common(table1, false, false);

  auto* schedule = app.add_subcommand(
      "schedule", "compile a graph into measurement rounds");
  std::string graph_file;
  std::string proc = "B";
  bool execute = false;
  schedule->add_option("graph", graph_file, "graph file (JSON or edge list)")
      ->required();
  schedule->add_option("--proc", proc, "A (pair per edge) or B (one ancilla)")
      ->check(CLI::IsMember({"A", "B"}))
      ->capture_default_str();
  schedule->add_flag("--execute", execute,
                     "run the schedule on the tableau engine");
  add_common(schedule, true, false);

  auto* runp = app.add_subcommand("run-pattern",
                                  "execute a pattern JSON on an input state");
  std::string pattern_file;
  std::string input;
  runp->add_option("pattern", pattern_file, "pattern JSON file")->required();
  runp->add_option("--input", input,
                   "one of 0/1/+/- per wire (default all +)");
  add_common(runp, true, false);

  auto* map = app.add_subcommand("map", "emit a validated rewrite trace");
  std::string trace_name = "wire";
  double angle = 1.234567;
  map->add_option("--trace", trace_name, "which mapping to emit")
      ->check(CLI::IsMember(
          {"wire", "zrot", "xrot", "cnot-tqc-to-1wqc", "cnot-1wqc-to-tqc"}))
      ->capture_default_str();
  map->add_option("--angle", angle, "rotation angle for zrot/xrot")
      ->capture_default_str();
  add_common(map, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(suite, tolerance, seed, format, output);
    }
    if (table1->parsed()) {
      return cmd_table1(format, output);
    }
    if (schedule->parsed()) {
      return cmd_schedule(graph_file, proc, execute, seed, format, output);
    }
    if (runp->parsed()) {
      return cmd_run_pattern(pattern_file, input, seed, format, output);
    }
    return cmd_map(trace_name, angle, tolerance, format, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFail;
  }
}
