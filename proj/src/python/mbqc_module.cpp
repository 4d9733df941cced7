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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbqc/gadgets.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/policy.hpp"
#include "mbqc/rewrite.hpp"
#include "mbqc/scheduler.hpp"
#include "mbqc/statevector.hpp"
#include "mbqc/tableau.hpp"
#include "mbqc/verification.hpp"

namespace py = pybind11;

namespace {

mbqc::StateVector product_state(const std::string& input) {
  const unsigned wires = static_cast<unsigned>(input.size());
  mbqc::StateVector s(wires);
  for (unsigned w = 0; w < wires; ++w) {
    switch (input[w]) {
      case '0':
        break;
      case '1':
        s.apply_x(w);
        break;
      case '+':
        s.apply_h(w);
        break;
      case '-':
        s.apply_x(w);
        s.apply_h(w);
        break;
      default:
        throw std::invalid_argument("input wires must be one of 0/1/+/-");
    }
  }
  return s;
}

py::dict run_pattern_py(const mbqc::Pattern& p, std::string input,
                        uint64_t seed) {
  const unsigned wires = static_cast<unsigned>(p.inputs.size());
  if (input.empty()) input.assign(wires, '+');
  if (input.size() != wires) {
    throw std::invalid_argument("input needs one character per wire");
  }
  mbqc::OutcomePolicy policy = mbqc::OutcomePolicy::sample(seed);
  mbqc::PatternRun run = mbqc::run_pattern(p, product_state(input), policy);
  mbqc::Outcomes outcomes(run.outcomes.begin(), run.outcomes.end());
  mbqc::StateVector corrected = run.output;
  mbqc::apply_byproduct(corrected, p.byproduct, outcomes);

  py::dict out;
  out["seed"] = seed;
  out["input"] = input;
  py::dict oc;
  for (const auto& [q, bit] : run.outcomes) {
    oc[py::int_(q)] = bit;
  }
  out["outcomes"] = oc;
  out["amplitudes"] = corrected.amplitudes();
  return out;
}

py::dict execute_schedule_py(const mbqc::MeasurementSchedule& sched,
                             uint64_t seed) {
  mbqc::OutcomePolicy policy = mbqc::OutcomePolicy::sample(seed);
  mbqc::ScheduleExecution ex = mbqc::execute_schedule(sched, policy);
  std::string corrections = ex.corrections.str();
  ex.tableau.apply_pauli(ex.corrections);
  mbqc::StabilizerTableau want = mbqc::StabilizerTableau::from_graph(sched.base);
  bool match = true;
  std::vector<std::string> stabilizers;
  for (unsigned i = 0; i < want.num_stabilizers(); ++i) {
    stabilizers.push_back(ex.tableau.stabilizer(i).str());
    match = match && stabilizers.back() == want.stabilizer(i).str();
  }
  py::dict out;
  out["seed"] = seed;
  out["corrections"] = corrections;
  out["log"] = ex.log;
  out["stabilizers"] = stabilizers;
  out["matches_graph"] = match;
  return out;
}

py::dict check_to_dict(const mbqc::VerifyCheck& c) {
  py::dict d;
  d["name"] = c.name;
  d["pass"] = c.pass;
  d["branches"] = c.branches;
  d["worst_fidelity_deficit"] = c.worst_fidelity_deficit;
  d["detail"] = c.detail;
  return d;
}

py::list verify_py(const std::string& suite, double tol, uint64_t seed) {
  std::vector<mbqc::VerifySuite> suites;
  if (suite == "all") {
    suites = mbqc::verify_all(tol, seed);
  } else if (suite == "patterns") {
    suites.push_back(mbqc::verify_patterns(tol));
  } else if (suite == "gadgets") {
    suites.push_back(mbqc::verify_gadgets(tol, seed));
  } else if (suite == "mapping") {
    suites.push_back(mbqc::verify_mapping(tol));
  } else if (suite == "scheduler") {
    suites.push_back(mbqc::verify_scheduler(seed));
  } else {
    throw std::invalid_argument(
        "suite must be all, patterns, gadgets, mapping, or scheduler");
  }
  py::list out;
  for (const auto& s : suites) {
    py::dict d;
    d["name"] = s.name;
    d["pass"] = s.pass();
    py::list checks;
    for (const auto& c : s.checks) checks.append(check_to_dict(c));
    d["checks"] = checks;
    out.append(d);
  }
  return out;
}

std::string map_trace_py(const std::string& name, double angle, double tol) {
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
  } else if (name == "cnot-1wqc-to-tqc") {
    trace = mbqc::map_cnot_between_models(mbqc::MapDirection::OneWayToTqc);
    intended = mbqc::unitary_cnot();
  } else {
    throw std::invalid_argument("unknown trace: " + name);
  }
  mbqc::TraceReport report = mbqc::validate_trace(trace, intended, tol);
  if (!report.ok) {
    throw std::runtime_error("trace validation failed: " + report.failure);
  }
  return trace.to_json();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "One-way and teleportation-based measurement computing: patterns, "
      "gadgets, mapping traces, and graph-state schedules.";

  py::class_<mbqc::Graph>(m, "Graph")
      .def_static("from_edges", &mbqc::Graph::from_edges, py::arg("n"),
                  py::arg("edges"))
      .def_static("path", &mbqc::Graph::path, py::arg("n"))
      .def_static("cycle", &mbqc::Graph::cycle, py::arg("n"))
      .def_static("star", &mbqc::Graph::star, py::arg("leaves"))
      .def_static("complete", &mbqc::Graph::complete, py::arg("n"))
      .def_static("grid", &mbqc::Graph::grid, py::arg("rows"), py::arg("cols"))
      .def_static("random", &mbqc::Graph::random, py::arg("n"),
                  py::arg("edge_prob"), py::arg("seed"))
      .def_static("parse", &mbqc::Graph::parse, py::arg("text"))
      .def_readonly("n", &mbqc::Graph::n)
      .def_readonly("edges", &mbqc::Graph::edges)
      .def("max_degree", &mbqc::Graph::max_degree)
      .def("has_edge", &mbqc::Graph::has_edge, py::arg("a"), py::arg("b"))
      .def("to_json", &mbqc::Graph::to_json)
      .def("__repr__", [](const mbqc::Graph& g) {
        return "Graph(n=" + std::to_string(g.n) + ", edges=" +
               std::to_string(g.edges.size()) + ")";
      });

  py::class_<mbqc::ResourceCount>(m, "ResourceCount")
      .def_readonly("rows", &mbqc::ResourceCount::rows)
      .def_readonly("cols", &mbqc::ResourceCount::cols)
      .def_readonly("total", &mbqc::ResourceCount::total)
      .def_readonly("measured", &mbqc::ResourceCount::measured)
      .def("__repr__", [](const mbqc::ResourceCount& r) {
        return "ResourceCount(rows=" + std::to_string(r.rows) + ", cols=" +
               std::to_string(r.cols) + ", total=" + std::to_string(r.total) +
               ", measured=" + std::to_string(r.measured) + ")";
      });

  py::class_<mbqc::Pattern>(m, "Pattern")
      .def_static("from_json", &mbqc::Pattern::from_json, py::arg("text"))
      .def("to_json", &mbqc::Pattern::to_json)
      .def_property_readonly(
          "wires",
          [](const mbqc::Pattern& p) { return p.inputs.size(); })
      .def("resources",
           [](const mbqc::Pattern& p) { return mbqc::resources(p); })
      .def("run", &run_pattern_py, py::arg("input") = std::string(),
           py::arg("seed") = 0,
           "Run the measurement plan on a product input state (one of "
           "0/1/+/- per wire) and return outcomes plus the corrected "
           "output amplitudes.");

  m.def("pattern_wire", &mbqc::pattern_wire);
  m.def("pattern_xrot", &mbqc::pattern_xrot, py::arg("phi"));
  m.def("pattern_zrot", &mbqc::pattern_zrot, py::arg("theta"));
  m.def("pattern_euler", &mbqc::pattern_euler, py::arg("psi"),
        py::arg("theta"), py::arg("phi"));
  m.def("pattern_cnot6", &mbqc::pattern_cnot6);
  m.def("pattern_cnot_square", &mbqc::pattern_cnot_square);
  m.def("pattern_remote_cz", &mbqc::pattern_remote_cz);
  m.def("compose_patterns", &mbqc::compose_patterns, py::arg("a"),
        py::arg("b"));
  m.def("eliminate_redundant_wires", &mbqc::eliminate_redundant_wires,
        py::arg("p"));

  py::class_<mbqc::MeasurementSchedule>(m, "MeasurementSchedule")
      .def_property_readonly(
          "procedure",
          [](const mbqc::MeasurementSchedule& s) {
            return std::string(1, s.procedure);
          })
      .def_readonly("depth", &mbqc::MeasurementSchedule::depth)
      .def_readonly("total_qubits", &mbqc::MeasurementSchedule::total_qubits)
      .def_readonly("ancillas", &mbqc::MeasurementSchedule::ancillas)
      .def_property_readonly(
          "num_rounds",
          [](const mbqc::MeasurementSchedule& s) { return s.rounds.size(); })
      .def("to_json", &mbqc::MeasurementSchedule::to_json);

  m.def(
      "build_schedule",
      [](const mbqc::Graph& g, const std::string& procedure) {
        if (procedure.size() != 1) {
          throw std::invalid_argument("procedure must be 'A' or 'B'");
        }
        return mbqc::build_schedule(g, procedure[0]);
      },
      py::arg("graph"), py::arg("procedure") = "B",
      "Compile a graph into rounds of disjoint two-qubit measurements.");
  m.def("execute_schedule", &execute_schedule_py, py::arg("schedule"),
        py::arg("seed") = 0,
        "Run a schedule on the stabilizer engine; reports the Z-frame "
        "corrections and whether the corrected state is the graph state.");

  m.def("frame_walkthrough_blocks", &mbqc::frame_walkthrough_blocks,
        "The two-ancilla frame walkthrough, one rendered block per step.");
  m.def("map_trace", &map_trace_py, py::arg("name"),
        py::arg("angle") = 1.234567, py::arg("tolerance") = 1e-10,
        "Validate and emit a named rewrite trace as JSON. Names: wire, "
        "zrot, xrot, cnot-tqc-to-1wqc, cnot-1wqc-to-tqc.");

  m.def("verify", &verify_py, py::arg("suite") = "all",
        py::arg("tolerance") = 1e-10, py::arg("seed") = 0,
        "Run a property suite and return its checks as dictionaries.");

  m.def(
      "rus_statistics",
      [](unsigned runs, uint64_t seed) {
        mbqc::RusReport r = mbqc::rus_statistics(runs, seed);
        py::dict d;
        d["runs"] = r.runs;
        d["mean_attempts"] = r.mean_attempts;
        d["max_attempts"] = r.max_attempts;
        d["worst_fidelity_deficit"] = r.worst_fidelity_deficit;
        return d;
      },
      py::arg("runs") = 1000, py::arg("seed") = 0);

  m.def(
      "cross_engine_agreement",
      [](unsigned circuits, uint64_t seed, double tol) {
        mbqc::CrossEngineReport r =
            mbqc::cross_engine_agreement(circuits, seed, tol);
        py::dict d;
        d["pass"] = r.pass;
        d["circuits"] = r.circuits;
        d["measurements"] = r.measurements;
        d["worst_probability_gap"] = r.worst_probability_gap;
        d["detail"] = r.detail;
        return d;
      },
      py::arg("circuits") = 100, py::arg("seed") = 0,
      py::arg("tolerance") = 1e-10);
}
