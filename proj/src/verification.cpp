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

#include "mbqc/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <variant>

#include "mbqc/circuit.hpp"
#include "mbqc/gadgets.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/policy.hpp"
#include "mbqc/rewrite.hpp"
#include "mbqc/scheduler.hpp"
#include "mbqc/statevector.hpp"
#include "mbqc/tableau.hpp"

namespace mbqc {
namespace {

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Records a branch fidelity; the first violation freezes the detail text
// so the report names the earliest counterexample.
void note_deficit(VerifyCheck& c, double deficit, double tol,
                  const std::string& where) {
  c.worst_fidelity_deficit = std::max(c.worst_fidelity_deficit, deficit);
  if (deficit > tol && c.pass) {
    c.pass = false;
    c.detail = where + ": fidelity deficit " + sci(deficit);
  }
}

void fail(VerifyCheck& c, const std::string& why) {
  if (c.pass) {
    c.pass = false;
    c.detail = why;
  }
}

StateVector random_state(unsigned n, std::mt19937_64& gen) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<Complex> amps(std::size_t{1} << n);
  for (auto& a : amps) a = Complex(dist(gen), dist(gen));
  StateVector s = StateVector::from_amplitudes(n, std::move(amps));
  s.normalize();
  return s;
}

VerifyCheck pattern_check(std::string name, unsigned expect_branches,
                          const std::vector<double>& angles,
                          Pattern (*make_pattern)(double),
                          WireUnitary (*make_unitary)(double), double tol) {
  VerifyCheck c;
  c.name = std::move(name);
  c.pass = true;
  for (double a : angles) {
    try {
      ValidationReport r = validate_pattern(make_pattern(a), make_unitary(a), tol);
      c.branches = r.branches;
      c.worst_fidelity_deficit =
          std::max(c.worst_fidelity_deficit, r.worst_fidelity_deficit);
      if (r.branches != expect_branches) {
        fail(c, "expected " + std::to_string(expect_branches) + " branches, saw " +
                    std::to_string(r.branches));
      }
    } catch (const std::exception& e) {
      fail(c, "angle " + std::to_string(a) + ": " + e.what());
    }
  }
  return c;
}

VerifyCheck teleport_check(std::string name, bool rotate_ancilla, double tol) {
  VerifyCheck c;
  c.name = std::move(name);
  c.pass = true;
  const Mat2 u = mat2_mul(mat2_uz(0.7), mat2_ux(1.1));
  for (const StateVector& psi : spanning_states(1)) {
    auto leaves = enumerate_branches([&](OutcomePolicy& pol) {
      TeleportResult r = teleport_apply(psi, u, rotate_ancilla, pol);
      StateVector want = psi;
      if (rotate_ancilla) {
        apply_sigma(want, 0, r.j.index());
        want.apply_mat2(0, u);
      } else {
        want.apply_mat2(0, u);
        apply_sigma(want, 0, r.j.index());
      }
      note_deficit(c, 1.0 - r.out.fidelity(want), tol, "Bell branch");
    });
    c.branches = static_cast<unsigned>(leaves.size());
    if (leaves.size() != 4) fail(c, "expected 4 Bell branches");
  }
  return c;
}

VerifyCheck entangler_prep_check(double tol) {
  VerifyCheck c;
  c.name = "entangler_prep";
  c.pass = true;
  const StateVector target = cnot_ancilla();
  auto leaves = enumerate_branches(
      [](OutcomePolicy& pol) { cnot_ancilla_by_measurement(pol); });
  c.branches = static_cast<unsigned>(leaves.size());
  if (leaves.size() != 8) fail(c, "expected 8 outcome branches");
  for (const auto& bits : leaves) {
    OutcomePolicy pol = OutcomePolicy::force(bits);
    MeasuredPrep prep = cnot_ancilla_by_measurement(pol);
    note_deficit(c, 1.0 - prep.state.fidelity(target), tol, "prep branch");
    if (prep.transcript.size() != 3) fail(c, "expected a 3-step transcript");
  }
  return c;
}

VerifyCheck cnot_gadget_check(double tol) {
  VerifyCheck c;
  c.name = "cnot_gadget";
  c.pass = true;
  for (const StateVector& psi : spanning_states(2)) {
    StateVector want = psi;
    want.apply_cnot(0, 1);
    auto leaves = enumerate_branches([&](OutcomePolicy& pol) {
      CnotGadgetResult r = cnot_via_ancilla(psi, pol);
      note_deficit(c, 1.0 - r.out.fidelity(want), tol, "gadget branch");
    });
    c.branches = static_cast<unsigned>(leaves.size());
    if (leaves.size() != 16) fail(c, "expected 16 outcome branches");
  }
  return c;
}

VerifyCheck remote_cnot_check(double tol) {
  VerifyCheck c;
  c.name = "remote_cnot";
  c.pass = true;
  for (const StateVector& psi : spanning_states(2)) {
    StateVector want = psi;
    want.apply_cnot(0, 1);
    auto leaves = enumerate_branches([&](OutcomePolicy& pol) {
      StateVector out = remote_cnot_circuit(psi, pol);
      note_deficit(c, 1.0 - out.fidelity(want), tol, "readout branch");
    });
    c.branches = static_cast<unsigned>(leaves.size());
    if (leaves.size() != 4) fail(c, "expected 4 outcome branches");
  }
  return c;
}

VerifyCheck procedure_check(std::string name, CzProcedure proc, bool is_cnot,
                            unsigned expect_branches, double tol) {
  VerifyCheck c;
  c.name = std::move(name);
  c.pass = true;
  for (const StateVector& psi : spanning_states(2)) {
    StateVector want = psi;
    if (is_cnot) {
      want.apply_cnot(0, 1);
    } else {
      want.apply_cz(0, 1);
    }
    auto leaves = enumerate_branches([&](OutcomePolicy& pol) {
      FrameResult r = run_cz_procedure(proc, psi, pol);
      note_deficit(c, 1.0 - r.out.fidelity(want), tol, "procedure branch");
    });
    c.branches = static_cast<unsigned>(leaves.size());
    if (leaves.size() != expect_branches) {
      fail(c, "expected " + std::to_string(expect_branches) + " branches, saw " +
                  std::to_string(leaves.size()));
    }
  }
  return c;
}

// The one-ancilla procedures cost exactly two two-qubit measurements; the
// remaining step is the single-qubit ancilla readout.
VerifyCheck single_ancilla_cost_check() {
  VerifyCheck c;
  c.name = "single_ancilla_cost";
  c.pass = true;
  const CzProcedure procs[] = {CzProcedure::OneAncillaPlus,
                               CzProcedure::OneAncillaZero,
                               CzProcedure::OneAncillaCnot};
  for (CzProcedure proc : procs) {
    OutcomePolicy pol = OutcomePolicy::force_extended({});
    FrameResult r = run_cz_procedure(proc, StateVector(2), pol);
    unsigned two = 0, one = 0;
    for (const FrameStep& s : r.transcript) {
      if (s.observable.weight() == 2) ++two;
      if (s.observable.weight() == 1) ++one;
    }
    if (two != 2 || one != 1) {
      fail(c, "expected 2 two-qubit probes and 1 readout, saw " +
                  std::to_string(two) + " and " + std::to_string(one));
    }
  }
  if (c.pass) c.detail = "2 two-qubit probes + 1 readout per procedure";
  return c;
}

// Entangling two clients through the measured resource costs five
// two-qubit measurements in total: three to carve the resource out of
// product states, plus one Bell measurement per client.
VerifyCheck cnot_route_cost_check(double tol) {
  VerifyCheck c;
  c.name = "cnot_route_cost";
  c.pass = true;
  OutcomePolicy pol = OutcomePolicy::force_extended({});
  MeasuredPrep prep = cnot_ancilla_by_measurement(pol);
  unsigned two = 0;
  for (const FrameStep& s : prep.transcript) {
    if (s.observable.weight() == 2) ++two;
  }
  note_deficit(c, 1.0 - prep.state.fidelity(cnot_ancilla()), tol, "resource state");
  if (two != 3) fail(c, "expected 3 two-qubit resource measurements");
  if (c.pass) c.detail = "3 resource measurements + 2 Bell measurements = 5";
  return c;
}

VerifyCheck rus_check(double tol, uint64_t seed, unsigned runs) {
  VerifyCheck c;
  c.name = "repeat_until_success";
  c.pass = true;
  RusReport r = rus_statistics(runs, seed);
  c.worst_fidelity_deficit = r.worst_fidelity_deficit;
  if (r.worst_fidelity_deficit > tol) {
    fail(c, "worst fidelity deficit " + sci(r.worst_fidelity_deficit));
  }
  if (r.mean_attempts < 3.5 || r.mean_attempts > 4.5) {
    fail(c, "mean attempts " + std::to_string(r.mean_attempts) +
                " outside [3.5, 4.5]");
  }
  if (c.pass) {
    std::ostringstream os;
    os.precision(3);
    os << "mean attempts " << r.mean_attempts << " over " << r.runs << " runs";
    c.detail = os.str();
  }
  return c;
}

VerifyCheck trace_check(std::string name, const RewriteTrace& t,
                        const WireUnitary& u, double tol,
                        bool expect_cluster_end) {
  VerifyCheck c;
  c.name = std::move(name);
  TraceReport r = validate_trace(t, u, tol);
  c.pass = r.ok;
  c.branches = r.branches;
  c.worst_fidelity_deficit = r.worst_fidelity_deficit;
  c.detail = r.ok ? std::to_string(r.steps) + " steps" : r.failure;
  if (c.pass && expect_cluster_end) {
    const Circuit end = t.end();
    bool shape = true;
    for (const CircuitOp& op : end.ops) {
      if (const auto* p = std::get_if<PrepOp>(&op)) {
        if (p->basis != '+') shape = false;
      } else if (const auto* g = std::get_if<GateOp>(&op)) {
        if (g->gate.kind != CliffordKind::CZ) shape = false;
      } else if (const auto* m = std::get_if<MeasureOp>(&op)) {
        if (m->basis != 'X') shape = false;
      } else if (!std::holds_alternative<CondPauliOp>(op)) {
        shape = false;
      }
    }
    if (!shape) {
      fail(c, "end circuit uses ops outside plus-prep, CZ, X-measure");
    } else if (!matches_graph_pattern(end, pattern_cnot6())) {
      fail(c, "end circuit does not match the six-qubit cluster pattern");
    } else {
      c.detail += ", ends on the six-qubit cluster pattern";
    }
  }
  return c;
}

std::vector<std::string> stabilizer_rows(const StabilizerTableau& t) {
  std::vector<std::string> rows;
  for (unsigned i = 0; i < t.num_stabilizers(); ++i) {
    rows.push_back(t.stabilizer(i).str());
  }
  return rows;
}

bool rounds_disjoint(const MeasurementSchedule& s) {
  std::vector<std::vector<ScheduledMeasurement>> all = s.rounds;
  all.push_back(s.final_round);
  for (const auto& round : all) {
    std::vector<unsigned> seen;
    for (const ScheduledMeasurement& m : round) {
      for (unsigned q : m.qubits) {
        if (std::find(seen.begin(), seen.end(), q) != seen.end()) return false;
        seen.push_back(q);
      }
    }
  }
  return true;
}

// Builds, executes, and compares against the graph tableau after the Z
// frame is applied. Returns an empty string on success.
std::string run_schedule_case(const Graph& g, char proc, OutcomePolicy policy) {
  MeasurementSchedule s = build_schedule(g, proc);
  if (!rounds_disjoint(s)) return "a round touches a qubit twice";
  const unsigned max_deg = g.max_degree();
  if (proc == 'B') {
    if (s.depth != std::max(max_deg, 2u) + 1) return "depth bound violated";
  } else {
    if (s.rounds.size() != max_deg || s.depth != max_deg + 1) {
      return "pair rounds exceed the degree bound";
    }
  }
  ScheduleExecution ex = execute_schedule(s, policy);
  for (unsigned q = 0; q < ex.corrections.size(); ++q) {
    Pauli p = ex.corrections.letter(q);
    if (p != Pauli::I && p != Pauli::Z) return "correction is not a Z frame";
  }
  ex.tableau.apply_pauli(ex.corrections);
  if (stabilizer_rows(ex.tableau) !=
      stabilizer_rows(StabilizerTableau::from_graph(g))) {
    return "corrected run does not match the graph tableau";
  }
  return {};
}

Graph random_graph_with_edges(std::mt19937_64& gen) {
  for (;;) {
    unsigned n = 2 + static_cast<unsigned>(gen() % 9);
    Graph g = Graph::random(n, 0.5, gen());
    if (!g.edges.empty()) return g;
  }
}

VerifyCheck scheduler_random_check(char proc, uint64_t seed,
                                   unsigned num_graphs,
                                   unsigned seeds_per_graph) {
  VerifyCheck c;
  c.name = proc == 'B' ? "procedure_b_random_graphs" : "procedure_a_random_graphs";
  c.pass = true;
  std::mt19937_64 gen(seed);
  unsigned executions = 0;
  for (unsigned i = 0; i < num_graphs && c.pass; ++i) {
    Graph g = random_graph_with_edges(gen);
    for (unsigned s = 0; s < seeds_per_graph; ++s) {
      std::string why = run_schedule_case(g, proc, OutcomePolicy::sample(gen()));
      ++executions;
      if (!why.empty()) {
        fail(c, "graph " + g.to_json() + ": " + why);
        break;
      }
    }
  }
  c.branches = executions;
  if (c.pass) {
    c.detail = std::to_string(num_graphs) + " graphs, " +
               std::to_string(executions) + " executions";
  }
  return c;
}

VerifyCheck scheduler_single_edge_check() {
  VerifyCheck c;
  c.name = "single_edge_example";
  c.pass = true;
  Graph g = Graph::path(2);
  MeasurementSchedule s = build_schedule(g, 'A');
  OutcomePolicy all_plus = OutcomePolicy::force_extended({});
  ScheduleExecution ex = execute_schedule(s, all_plus);
  std::vector<std::string> rows = stabilizer_rows(ex.tableau);
  if (rows != std::vector<std::string>{"+XZ", "+ZX"}) {
    fail(c, "all-plus run did not pin {+XZ, +ZX}");
  }
  if (!ex.corrections.is_identity_letters()) {
    fail(c, "all-plus run should need no correction");
  }
  c.branches = 1;
  if (c.pass) c.detail = "pins +XZ and +ZX with no correction";
  return c;
}

}  // namespace

bool VerifySuite::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

VerifySuite verify_patterns(double tol) {
  VerifySuite suite;
  suite.name = "patterns";
  const std::vector<double> angles = {0.0, M_PI / 8, M_PI / 4, M_PI / 2,
                                      1.234567};
  const std::vector<double> none = {0.0};
  suite.checks.push_back(pattern_check(
      "wire", 4, none, [](double) { return pattern_wire(); },
      [](double) { return unitary_identity(1); }, tol));
  suite.checks.push_back(pattern_check(
      "xrot", 4, angles, [](double a) { return pattern_xrot(a); },
      [](double a) { return unitary_xrot(a); }, tol));
  suite.checks.push_back(pattern_check(
      "zrot", 4, angles, [](double a) { return pattern_zrot(a); },
      [](double a) { return unitary_zrot(a); }, tol));
  suite.checks.push_back(pattern_check(
      "cnot6", 16, none, [](double) { return pattern_cnot6(); },
      [](double) { return unitary_cnot(); }, tol));
  suite.checks.push_back(pattern_check(
      "remote_cz", 4, none, [](double) { return pattern_remote_cz(); },
      [](double) { return unitary_cz(); }, tol));
  return suite;
}

VerifySuite verify_gadgets(double tol, uint64_t seed) {
  VerifySuite suite;
  suite.name = "gadgets";
  suite.checks.push_back(teleport_check("teleport_rotated_pair", true, tol));
  suite.checks.push_back(teleport_check("teleport_rotated_basis", false, tol));
  suite.checks.push_back(entangler_prep_check(tol));
  suite.checks.push_back(cnot_gadget_check(tol));
  suite.checks.push_back(remote_cnot_check(tol));
  suite.checks.push_back(
      procedure_check("cz_two_ancilla", CzProcedure::TwoAncilla, false, 16, tol));
  suite.checks.push_back(procedure_check(
      "cz_one_ancilla_plus", CzProcedure::OneAncillaPlus, false, 8, tol));
  suite.checks.push_back(procedure_check(
      "cz_one_ancilla_zero", CzProcedure::OneAncillaZero, false, 8, tol));
  suite.checks.push_back(procedure_check(
      "cnot_one_ancilla", CzProcedure::OneAncillaCnot, true, 8, tol));
  suite.checks.push_back(single_ancilla_cost_check());
  suite.checks.push_back(cnot_route_cost_check(tol));
  suite.checks.push_back(rus_check(tol, seed, 2000));
  return suite;
}

VerifySuite verify_mapping(double tol) {
  VerifySuite suite;
  suite.name = "mapping";
  suite.checks.push_back(trace_check("wire_to_teleportation",
                                     map_wire_to_teleportation(),
                                     unitary_identity(1), tol, false));
  suite.checks.push_back(
      trace_check("zrot_to_generalized_bell",
                  map_rotation_to_generalized_bell('z', 1.234567),
                  unitary_zrot(1.234567), tol, false));
  suite.checks.push_back(
      trace_check("xrot_to_generalized_bell",
                  map_rotation_to_generalized_bell('x', 1.234567),
                  unitary_xrot(1.234567), tol, false));
  suite.checks.push_back(
      trace_check("cnot_tqc_to_1wqc",
                  map_cnot_between_models(MapDirection::TqcToOneWay),
                  unitary_cnot(), tol, true));
  suite.checks.push_back(
      trace_check("cnot_1wqc_to_tqc",
                  map_cnot_between_models(MapDirection::OneWayToTqc),
                  unitary_cnot(), tol, false));
  return suite;
}

VerifySuite verify_scheduler(uint64_t seed, unsigned num_graphs,
                             unsigned seeds_per_graph) {
  VerifySuite suite;
  suite.name = "scheduler";
  suite.checks.push_back(scheduler_single_edge_check());
  suite.checks.push_back(
      scheduler_random_check('A', seed + 1, num_graphs, seeds_per_graph));
  suite.checks.push_back(
      scheduler_random_check('B', seed + 2, num_graphs, seeds_per_graph));
  return suite;
}

std::vector<VerifySuite> verify_all(double tol, uint64_t seed) {
  return {verify_patterns(tol), verify_gadgets(tol, seed), verify_mapping(tol),
          verify_scheduler(seed)};
}

RusReport rus_statistics(unsigned runs, uint64_t seed) {
  std::mt19937_64 gen(seed);
  // Uz(0.4) Ux(0.9) is far from every Clifford, so nothing about the loop
  // degenerates to a trivially correctable case.
  const Mat2 u = mat2_mul(mat2_uz(0.4), mat2_ux(0.9));
  RusReport rep;
  rep.runs = runs;
  double total = 0;
  for (unsigned i = 0; i < runs; ++i) {
    StateVector psi = random_state(1, gen);
    StateVector want = psi;
    want.apply_mat2(0, u);
    OutcomePolicy pol = OutcomePolicy::sample(gen());
    RusResult r = repeat_until_success(psi, u, pol);
    total += r.attempts;
    rep.max_attempts = std::max(rep.max_attempts, r.attempts);
    rep.worst_fidelity_deficit =
        std::max(rep.worst_fidelity_deficit, 1.0 - r.out.fidelity(want));
  }
  rep.mean_attempts = runs ? total / runs : 0.0;
  return rep;
}

CrossEngineReport cross_engine_agreement(unsigned circuits, uint64_t seed,
                                         double tol) {
  std::mt19937_64 gen(seed);
  CrossEngineReport rep;
  rep.pass = true;
  for (unsigned ci = 0; ci < circuits && rep.pass; ++ci) {
    const unsigned n = 2 + static_cast<unsigned>(gen() % 7);
    const unsigned num_ops = 1 + static_cast<unsigned>(gen() % 30);
    const unsigned num_meas = 1 + static_cast<unsigned>(gen() % 6);

    // Ops index the gate after which a measurement fires; num_ops means
    // after the last gate.
    std::vector<unsigned> slots;
    for (unsigned m = 0; m < num_meas; ++m) {
      slots.push_back(static_cast<unsigned>(gen() % (num_ops + 1)));
    }
    std::sort(slots.begin(), slots.end());

    StateVector sv(n);
    StabilizerTableau t(n);
    for (unsigned q = 0; q < n; ++q) t.add_zero(q);
    std::vector<CliffordGate> applied;

    auto random_gate = [&]() {
      CliffordGate g{static_cast<CliffordKind>(gen() % 7),
                     static_cast<unsigned>(gen() % n), 0};
      if (g.kind == CliffordKind::CNOT || g.kind == CliffordKind::CZ) {
        do {
          g.q1 = static_cast<unsigned>(gen() % n);
        } while (g.q1 == g.q0);
      }
      return g;
    };

    auto random_observable = [&]() {
      PauliString p(n);
      do {
        for (unsigned q = 0; q < n; ++q) {
          p.set_letter(q, static_cast<Pauli>(gen() % 4));
        }
      } while (p.is_identity_letters());
      return p;
    };

    // The tableau never evolves. Measuring P after the gates so far is the
    // same as measuring the pullback U^dagger P U on the initial state, so
    // the gate list is replayed backwards with each gate inverted (S is the
    // only non-involution; its inverse is S cubed).
    auto pullback = [&](const PauliString& p) {
      std::vector<CliffordGate> inverse;
      for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        if (it->kind == CliffordKind::S) {
          inverse.push_back(*it);
          inverse.push_back(*it);
          inverse.push_back(*it);
        } else {
          inverse.push_back(*it);
        }
      }
      return conjugate_by_circuit(p, inverse);
    };

    unsigned mi = 0;
    auto measure_both = [&]() {
      PauliString obs = random_observable();
      PauliString heis = pullback(obs);
      const bool flipped = heis.phase_exp() == 2;
      PauliString positive = heis;
      positive.set_phase_exp(0);

      OutcomePolicy tpol = OutcomePolicy::sample(gen());
      MeasurementRecord rec = t.measure_pauli(positive, tpol);
      const int outcome = rec.outcome ^ (flipped ? 1 : 0);

      // Probability agreement is checked before the dense state commits to
      // the branch, so a zero-probability forcing can never slip through.
      StateVector probe = sv;
      const double p = probe.project_unnormalized(obs, outcome);
      const double expected = rec.deterministic ? 1.0 : 0.5;
      const double gap = std::abs(p - expected);
      rep.worst_probability_gap = std::max(rep.worst_probability_gap, gap);
      ++rep.measurements;
      ++mi;
      if (gap > tol) {
        rep.pass = false;
        std::ostringstream os;
        os << "circuit " << ci << " measurement " << mi << ": " << obs.str()
           << " outcome " << outcome << " has probability " << p
           << " but the tableau called it "
           << (rec.deterministic ? "deterministic" : "random");
        rep.detail = os.str();
        return;
      }
      OutcomePolicy fpol = OutcomePolicy::force_extended({outcome});
      const int got = sv.measure_pauli_product(obs, fpol);
      if (got != outcome) {
        rep.pass = false;
        std::ostringstream os;
        os << "circuit " << ci << " measurement " << mi
           << ": dense outcome " << got << " != tableau outcome " << outcome;
        rep.detail = os.str();
      }
    };

    std::size_t next_slot = 0;
    for (unsigned op = 0; op <= num_ops && rep.pass; ++op) {
      while (next_slot < slots.size() && slots[next_slot] == op && rep.pass) {
        measure_both();
        ++next_slot;
      }
      if (op == num_ops) break;
      CliffordGate g = random_gate();
      sv.apply_clifford(g);
      applied.push_back(g);
    }
    if (rep.pass) ++rep.circuits;
  }
  return rep;
}

}  // namespace mbqc
