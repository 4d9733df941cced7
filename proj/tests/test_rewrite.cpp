// Copyright 2026 The mbqc authors
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

#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"
#include "mbqc/rewrite.hpp"

using namespace mbqc;

namespace {

constexpr double kTol = 1e-10;

Circuit make(unsigned n, std::vector<unsigned> in, std::vector<unsigned> out,
             std::vector<CircuitOp> ops) {
  Circuit c;
  c.num_qubits = n;
  c.inputs = std::move(in);
  c.outputs = std::move(out);
  c.ops = std::move(ops);
  return c;
}

GateOp h(unsigned q) { return GateOp{{CliffordKind::H, q, 0}}; }
GateOp cz(unsigned a, unsigned b) { return GateOp{{CliffordKind::CZ, a, b}}; }
GateOp cnot(unsigned c, unsigned t) {
  return GateOp{{CliffordKind::CNOT, c, t}};
}
RotOp uz(unsigned q, double a) { return RotOp{'z', q, AngleExpr{a, {}}}; }
RotOp ux(unsigned q, double a) { return RotOp{'x', q, AngleExpr{a, {}}}; }
MeasureOp mx(unsigned q, unsigned bit) {
  MeasureOp m;
  m.basis = 'X';
  m.qubit = q;
  m.bit = bit;
  return m;
}
MeasureOp me(unsigned q, double angle, unsigned bit) {
  MeasureOp m;
  m.basis = 'E';
  m.qubit = q;
  m.angle = AngleExpr{angle, {}};
  m.bit = bit;
  return m;
}

std::vector<std::string> op_lines(const Circuit& c) {
  std::vector<std::string> lines;
  for (const CircuitOp& op : c.ops) lines.push_back(op_text(op));
  return lines;
}

// Applies the rule, checks the channel is untouched, applies the returned
// inverse and checks the original comes back byte for byte.
Circuit check_rule(const Circuit& c, const RuleApplication& app) {
  Applied fwd = apply_rule(c, app);
  EquivalenceReport eq = verify_equivalence(c, fwd.circuit, kTol);
  CHECK(eq.equivalent);
  CHECK(eq.worst_probability_gap < kTol);
  CHECK(eq.worst_fidelity_deficit < kTol);
  Applied back = apply_rule(fwd.circuit, fwd.inverse);
  CHECK(back.circuit.pretty() == c.pretty());
  return fwd.circuit;
}

}  // namespace

TEST_CASE("pattern translation implements the pattern unitary") {
  const double a = 0.77;
  struct Case {
    Pattern p;
    WireUnitary u;
  };
  std::vector<Case> cases;
  cases.push_back({pattern_wire(), [](StateVector&) {}});
  cases.push_back({pattern_zrot(a),
                   [a](StateVector& s) { s.apply_uz(0, a); }});
  cases.push_back({pattern_xrot(a),
                   [a](StateVector& s) { s.apply_ux(0, a); }});
  cases.push_back({pattern_cnot6(),
                   [](StateVector& s) { s.apply_cnot(0, 1); }});
  for (const Case& cs : cases) {
    const Circuit c = pattern_to_circuit(cs.p);
    const EquivalenceReport rep = verify_implements(c, cs.u);
    CHECK(rep.worst_probability_gap < kTol);
    CHECK(rep.worst_fidelity_deficit < kTol);
  }
}

TEST_CASE("translated circuit branches match direct pattern runs") {
  const Pattern p = pattern_xrot(1.1);
  const Circuit c = pattern_to_circuit(p);
  for (const StateVector& in : spanning_states(1)) {
    for (const Branch& br : enumerate_forced_branches(c, in)) {
      REQUIRE(br.probability > 0.2);  // all four branches are uniform
      std::vector<int> plan_bits;
      for (const MeasureStep& step : p.plan) {
        plan_bits.push_back(br.bits.at(step.qubit));
      }
      OutcomePolicy pol = OutcomePolicy::force(plan_bits);
      PatternRun run = run_pattern(p, in, pol);
      apply_byproduct(run.output, p.byproduct, br.bits);
      CHECK(br.output.fidelity(run.output) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("wire pattern translates to the pinned op list") {
  const Circuit c = pattern_to_circuit(pattern_wire());
  CHECK(c.pretty() ==
        "circuit n=3 in=0 out=2\n"
        "  prep+ 1\n"
        "  prep+ 2\n"
        "  cz 1 2\n"
        "  cz 0 1\n"
        "  mx 0 -> b0\n"
        "  mx 1 -> b1\n"
        "  cpx[b1] 2\n"
        "  cpz[b0] 2\n");
  CHECK(c.hash() == pattern_to_circuit(pattern_wire()).hash());
  Circuit tweaked = c;
  tweaked.ops.push_back(h(2));
  CHECK(tweaked.hash() != c.hash());
}

TEST_CASE("sampled runs insist on causal outcome order") {
  RotOp dependent{'z', 0, AngleExpr{0.5, {7}}};
  const Circuit c = make(1, {0}, {0}, {dependent, mx(0, 7)});
  OutcomePolicy pol = OutcomePolicy::sample(3);
  CHECK_THROWS_AS(run_sampled(c, spanning_states(1)[2], pol),
                  std::logic_error);
  // Forced runs accept the same circuit: every branch fixes the bit ahead
  // of time.
  CHECK(enumerate_forced_branches(c, spanning_states(1)[2]).size() == 2);
}

TEST_CASE("insert_hh and cancel_hh round trip across a disjoint gap") {
  const Circuit c = make(2, {0, 1}, {0, 1}, {uz(1, 0.3)});
  const Applied ins =
      apply_rule(c, {RewriteRule::InsertHH, 0, 0u, std::size_t{2}});
  CHECK(op_lines(ins.circuit) ==
        std::vector<std::string>{"h 0", "uz(0.3) 1", "h 0"});
  CHECK(ins.inverse.rule == RewriteRule::CancelHH);
  const Applied back = apply_rule(ins.circuit, ins.inverse);
  CHECK(back.circuit.pretty() == c.pretty());
  check_rule(c, {RewriteRule::InsertHH, 0, 0u, std::size_t{2}});

  // The pair may not straddle an op on its own qubit.
  CHECK_THROWS_AS(
      apply_rule(make(2, {0, 1}, {0, 1}, {uz(0, 0.3)}),
                 {RewriteRule::InsertHH, 0, 0u, std::size_t{2}}),
      std::invalid_argument);
}

TEST_CASE("cz_cnot_identity expands a lone cz into h-conjugated cnot") {
  const Circuit c = make(2, {0, 1}, {0, 1}, {cz(0, 1)});
  const Circuit expanded = check_rule(c, {RewriteRule::CzCnotIdentity, 0});
  CHECK(op_lines(expanded) ==
        std::vector<std::string>{"h 1", "cnot 0 1", "h 1"});
  const Circuit back = check_rule(expanded, {RewriteRule::CzCnotIdentity, 0});
  CHECK(back.pretty() == c.pretty());
}

TEST_CASE("bell_transpose hops symmetric ops across the pair") {
  const Circuit c =
      make(3, {2}, {0, 1, 2}, {BellPrepOp{0, 1}, uz(0, 0.7)});
  const Circuit moved = check_rule(c, {RewriteRule::BellTranspose, 0});
  CHECK(op_lines(moved) ==
        std::vector<std::string>{"[bellprep 0 1]", "uz(0.7) 1"});
  const Circuit hc = make(3, {2}, {0, 1, 2}, {BellPrepOp{0, 1}, h(1)});
  const Circuit hmoved = check_rule(hc, {RewriteRule::BellTranspose, 0});
  CHECK(op_lines(hmoved) ==
        std::vector<std::string>{"[bellprep 0 1]", "h 0"});
}

TEST_CASE("commute_cnot_cz leaves a bridging cz when the target is shared") {
  const Circuit c = make(3, {0, 1}, {0, 1, 2},
                         {PrepOp{2, '+'}, cz(0, 2), cnot(1, 2)});
  const Circuit out = check_rule(c, {RewriteRule::CommuteCnotCz, 1});
  CHECK(op_lines(out) == std::vector<std::string>{"prep+ 2", "cnot 1 2",
                                                  "cz 0 2", "cz 0 1"});
  // The inverse absorbs the bridge again (checked inside check_rule); a
  // shared control swaps cleanly in both directions.
  const Circuit cc = make(3, {0, 1}, {0, 1, 2},
                          {PrepOp{2, '+'}, cz(0, 1), cnot(1, 2)});
  const Circuit swapped = check_rule(cc, {RewriteRule::CommuteCnotCz, 1});
  CHECK(op_lines(swapped) == std::vector<std::string>{"prep+ 2", "cnot 1 2",
                                                      "cz 0 1"});
}

TEST_CASE("commute_disjoint swaps ops with disjoint support only") {
  const Circuit c = make(2, {0, 1}, {0, 1}, {h(0), uz(1, 0.4)});
  const Circuit out = check_rule(c, {RewriteRule::CommuteDisjoint, 0});
  CHECK(op_lines(out) == std::vector<std::string>{"uz(0.4) 1", "h 0"});
  const Circuit overlap = make(2, {0, 1}, {0, 1}, {h(0), uz(0, 0.4)});
  CHECK_THROWS_AS(apply_rule(overlap, {RewriteRule::CommuteDisjoint, 0}),
                  std::invalid_argument);
}

TEST_CASE("commute_h_rot swaps the rotation axis across h") {
  const Circuit c = make(1, {0}, {0}, {h(0), ux(0, 0.7)});
  const Circuit out = check_rule(c, {RewriteRule::CommuteHRot, 0});
  CHECK(op_lines(out) == std::vector<std::string>{"uz(0.7) 0", "h 0"});
  // Involution: same rule, same site, back to the start.
  const Circuit back = check_rule(out, {RewriteRule::CommuteHRot, 0});
  CHECK(back.pretty() == c.pretty());
}

TEST_CASE("commute_uz_cz slides z rotations through the entangler") {
  const Circuit c = make(2, {0, 1}, {0, 1}, {cz(0, 1), uz(1, 0.9)});
  const Circuit out = check_rule(c, {RewriteRule::CommuteUzCz, 0});
  CHECK(op_lines(out) == std::vector<std::string>{"uz(0.9) 1", "cz 0 1"});
  const Circuit xrot_case = make(2, {0, 1}, {0, 1}, {cz(0, 1), ux(1, 0.9)});
  CHECK_THROWS_AS(apply_rule(xrot_case, {RewriteRule::CommuteUzCz, 0}),
                  std::invalid_argument);
}

TEST_CASE("cnot into a fresh |+> target is the identity") {
  const Circuit c = make(3, {0, 1}, {0, 1, 2},
                         {PrepOp{2, '+'}, cnot(0, 2)});
  const Circuit out = check_rule(c, {RewriteRule::CnotOnPlusPlus, 0});
  CHECK(op_lines(out) == std::vector<std::string>{"prep+ 2"});
  // Inserting direction needs the control spelled out.
  const Applied ins =
      apply_rule(out, {RewriteRule::CnotOnPlusPlus, 0, 0u, std::nullopt});
  CHECK(ins.circuit.pretty() == c.pretty());
}

TEST_CASE("equatorial measurement peels into a z rotation and mx") {
  const Circuit c =
      make(2, {0}, {1}, {PrepOp{1, '+'}, cz(0, 1), me(0, 0.8, 0)});
  const Circuit out = check_rule(c, {RewriteRule::EquatorialToUzX, 2});
  CHECK(op_lines(out) ==
        std::vector<std::string>{"prep+ 1", "cz 0 1", "uz(-0.8) 0",
                                 "mx 0 -> b0"});
  const Circuit back = check_rule(out, {RewriteRule::EquatorialToUzX, 2});
  CHECK(back.pretty() == c.pretty());
}

TEST_CASE("box_bell_prep equals the prep-cz-h window") {
  const Circuit boxed =
      make(3, {2}, {0, 1, 2}, {BellPrepOp{0, 1}});
  const Circuit window = check_rule(boxed, {RewriteRule::BoxBellPrep, 0});
  CHECK(op_lines(window) == std::vector<std::string>{"prep+ 0", "prep+ 1",
                                                     "cz 0 1", "h 0"});
  // The boxed output is stabilized by XX and ZZ: both Bell observables are
  // deterministic +1 on it.
  Branch br = run_forced(boxed, StateVector(1), {});
  StateVector pair = br.output.factor_keep({0, 1});
  PauliString xx(2);
  xx.set_letter(0, Pauli::X);
  xx.set_letter(1, Pauli::X);
  PauliString zz(2);
  zz.set_letter(0, Pauli::Z);
  zz.set_letter(1, Pauli::Z);
  OutcomePolicy pol = OutcomePolicy::force({});
  CHECK(pair.measure_pauli_product(xx, pol) == 0);
  CHECK(pair.measure_pauli_product(zz, pol) == 0);
}

TEST_CASE("box_bell_meas equals the h-cz-mx-mx window") {
  const Circuit boxed = make(3, {0}, {2},
                             {BellPrepOp{1, 2}, BellMeasureOp{0, 1, 0, 1}});
  const Circuit window = check_rule(boxed, {RewriteRule::BoxBellMeas, 1});
  CHECK(op_lines(window) ==
        std::vector<std::string>{"[bellprep 1 2]", "h 1", "cz 0 1",
                                 "mx 0 -> b0", "mx 1 -> b1"});
}

TEST_CASE("box_generalized_bell folds a rotation on either side") {
  const Circuit left = make(3, {0}, {2},
                            {BellPrepOp{1, 2}, uz(0, 0.6),
                             BellMeasureOp{0, 1, 0, 1}});
  const Circuit lboxed = check_rule(left, {RewriteRule::BoxGeneralizedBell, 1});
  CHECK(op_lines(lboxed) ==
        std::vector<std::string>{"[bellprep 1 2]",
                                 "[genbell z(0.6) side=1 0 1 -> b0 b1]"});
  const Circuit right = make(3, {0}, {2},
                             {BellPrepOp{1, 2}, ux(1, 0.6),
                              BellMeasureOp{0, 1, 0, 1}});
  const Circuit rboxed =
      check_rule(right, {RewriteRule::BoxGeneralizedBell, 1});
  CHECK(op_lines(rboxed) ==
        std::vector<std::string>{"[bellprep 1 2]",
                                 "[genbell x(0.6) side=2 0 1 -> b0 b1]"});
}

TEST_CASE("equivalence relabeling pairs branches across bit renamings") {
  const Circuit a = make(3, {0}, {2},
                         {BellPrepOp{1, 2}, BellMeasureOp{0, 1, 0, 1},
                          CondPauliOp{Pauli::X, 2, BitExpr{0, {1}}},
                          CondPauliOp{Pauli::Z, 2, BitExpr{0, {0}}}});
  SUBCASE("identity") {
    const EquivalenceReport rep = verify_equivalence(a, a, kTol);
    CHECK(rep.equivalent);
    CHECK(rep.branches == 4);
    for (const auto& [lhs, rhs] : rep.relabeling) CHECK(lhs == rhs);
  }
  SUBCASE("swapped outcome roles") {
    // Same channel with the two Bell outcome bits playing exchanged roles.
    // Without corrections the leftover Pauli differs per branch, so the
    // swap pairing is the only one that matches.
    const Circuit bare = make(3, {0}, {2},
                              {BellPrepOp{1, 2}, BellMeasureOp{0, 1, 0, 1}});
    const Circuit swapped = make(3, {0}, {2},
                                 {BellPrepOp{1, 2},
                                  BellMeasureOp{0, 1, 1, 0}});
    const EquivalenceReport rep = verify_equivalence(bare, swapped, kTol);
    CHECK(rep.equivalent);
    bool saw_swap = false;
    for (const auto& [lhs, rhs] : rep.relabeling) {
      CHECK(lhs.at(0) == rhs.at(1));
      CHECK(lhs.at(1) == rhs.at(0));
      if (lhs.at(0) != lhs.at(1)) saw_swap = true;
    }
    CHECK(saw_swap);
  }
  SUBCASE("inequivalent circuits produce a counterexample") {
    const Circuit czc = make(2, {0, 1}, {0, 1}, {cz(0, 1)});
    const Circuit cnc = make(2, {0, 1}, {0, 1}, {cnot(0, 1)});
    const EquivalenceReport rep = verify_equivalence(czc, cnc, kTol);
    CHECK(!rep.equivalent);
    CHECK(rep.counterexample.find("no compatible partner") !=
          std::string::npos);
  }
  SUBCASE("wire count mismatch throws") {
    const Circuit one = make(1, {0}, {0}, {h(0)});
    const Circuit two = make(2, {0, 1}, {0, 1}, {h(0)});
    CHECK_THROWS_AS(verify_equivalence(one, two, kTol),
                    std::invalid_argument);
  }
}

TEST_CASE("wire trace reaches the teleportation form in three steps") {
  const RewriteTrace t = map_wire_to_teleportation();
  CHECK(t.steps.size() == 3);
  CHECK(t.start.pretty() == pattern_to_circuit(pattern_wire()).pretty());
  CHECK(t.end().pretty() ==
        "circuit n=3 in=0 out=2\n"
        "  [bellprep 1 2]\n"
        "  [bellmeas 0 1 -> b0 b1]\n"
        "  cpx[b1] 2\n"
        "  cpz[b0] 2\n");
  const TraceReport rep = validate_trace(t, [](StateVector&) {});
  INFO(rep.failure);
  CHECK(rep.ok);
  CHECK(rep.branches == 4);
  CHECK(rep.worst_probability_gap < kTol);
  CHECK(rep.worst_fidelity_deficit < kTol);
}

TEST_CASE("rotation traces end in a one-sided generalized measurement") {
  for (double angle : {0.0, M_PI / 8, M_PI / 2, 1.234567}) {
    const RewriteTrace tz = map_rotation_to_generalized_bell('z', angle);
    CHECK(tz.steps.size() == 7);
    const TraceReport rz = validate_trace(
        tz, [angle](StateVector& s) { s.apply_uz(0, angle); });
    INFO("zrot(", angle, "): ", rz.failure);
    CHECK(rz.ok);

    const RewriteTrace tx = map_rotation_to_generalized_bell('x', angle);
    CHECK(tx.steps.size() == 8);
    const TraceReport rx = validate_trace(
        tx, [angle](StateVector& s) { s.apply_ux(0, angle); });
    INFO("xrot(", angle, "): ", rx.failure);
    CHECK(rx.ok);
  }
  // The measurement basis ends up on the correct half: rotation side 1 for
  // the z case (input half), side 2 for the x case (kept half).
  CHECK(map_rotation_to_generalized_bell('z', 0.9).end().pretty().find(
            "side=1") != std::string::npos);
  CHECK(map_rotation_to_generalized_bell('x', 0.9).end().pretty().find(
            "side=2") != std::string::npos);
}

TEST_CASE("zero-angle x rotation degenerates to the wire channel") {
  const Circuit xrot0 = map_rotation_to_generalized_bell('x', 0.0).end();
  const Circuit wire = map_wire_to_teleportation().end();
  const EquivalenceReport rep = verify_equivalence(xrot0, wire, kTol);
  CHECK(rep.equivalent);
  CHECK(rep.worst_fidelity_deficit < kTol);
}

TEST_CASE("cnot trace turns the teleportation gadget into the cluster") {
  const RewriteTrace t = map_cnot_between_models(MapDirection::TqcToOneWay);
  CHECK(t.steps.size() == 9);
  CHECK(t.start.pretty() == cnot_teleport_circuit().pretty());
  const TraceReport rep =
      validate_trace(t, [](StateVector& s) { s.apply_cnot(0, 1); });
  INFO(rep.failure);
  CHECK(rep.ok);

  // The end form is a genuine measurement-pattern circuit: |+> preps, cz
  // entanglers and X measurements only, structurally the six-qubit cluster.
  const Circuit& end = t.end();
  for (const CircuitOp& op : end.ops) {
    if (const auto* g = std::get_if<GateOp>(&op)) {
      CHECK(g->gate.kind == CliffordKind::CZ);
    }
  }
  CHECK(matches_graph_pattern(end, pattern_cnot6()));
}

TEST_CASE("cnot trace inverts back to the teleportation gadget") {
  const RewriteTrace fwd = map_cnot_between_models(MapDirection::TqcToOneWay);
  const RewriteTrace rev = map_cnot_between_models(MapDirection::OneWayToTqc);
  CHECK(rev.start.pretty() == fwd.end().pretty());
  CHECK(rev.end().pretty() == fwd.start.pretty());
  CHECK(rev.steps.size() == fwd.steps.size());
  const TraceReport rep =
      validate_trace(rev, [](StateVector& s) { s.apply_cnot(0, 1); });
  INFO(rep.failure);
  CHECK(rep.ok);

  // Double inversion reproduces the forward step list.
  const RewriteTrace twice = invert_trace(rev);
  REQUIRE(twice.steps.size() == fwd.steps.size());
  for (std::size_t i = 0; i < fwd.steps.size(); ++i) {
    CHECK(twice.steps[i].circuit.pretty() == fwd.steps[i].circuit.pretty());
  }
}

TEST_CASE("trace json lists rule, site and circuit hash per step") {
  const RewriteTrace t = map_wire_to_teleportation();
  const nlohmann::json j = nlohmann::json::parse(t.to_json());
  REQUIRE(j["steps"].size() == 3);
  CHECK(j["steps"][0]["rule"] == "insert_hh");
  CHECK(j["steps"][0]["qubit"] == 1);
  for (const auto& step : j["steps"]) {
    CHECK(step.contains("site"));
    const std::string hash = step["circuit_hash"];
    CHECK(hash.substr(0, 2) == "0x");
    CHECK(hash.size() == 18);
  }
  CHECK(j["end"]["hash"] == j["steps"][2]["circuit_hash"]);
  CHECK(j["start"]["ops"].size() == t.start.ops.size());
}

TEST_CASE("rule names round trip") {
  for (RewriteRule r : {
           RewriteRule::InsertHH, RewriteRule::CancelHH,
           RewriteRule::CzCnotIdentity, RewriteRule::BellTranspose,
           RewriteRule::CommuteCnotCz, RewriteRule::CommuteDisjoint,
           RewriteRule::CommuteHRot, RewriteRule::CommuteUzCz,
           RewriteRule::CnotOnPlusPlus, RewriteRule::EquatorialToUzX,
           RewriteRule::BoxBellPrep, RewriteRule::BoxBellMeas,
           RewriteRule::BoxGeneralizedBell,
       }) {
    CHECK(rule_from_name(rule_name(r)) == r);
  }
  CHECK_THROWS_AS(rule_from_name("frobnicate"), std::invalid_argument);
}
