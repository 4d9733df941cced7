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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/circuit.hpp"

namespace mbqc {

// Local circuit rewrites. Every rule preserves the measurement channel and
// is invertible: applying a rule returns the application that undoes it
// byte for byte. Rules match a fixed op window at an explicit site and
// throw std::invalid_argument when the window does not have the expected
// shape, so traces stay auditable step by step.
enum class RewriteRule {
  InsertHH,            // identity pair h q; h q around a q-free window
  CancelHH,            // inverse of InsertHH
  CzCnotIdentity,      // cz a b <-> h b; cnot a b; h b
  BellTranspose,       // one-qubit op on a Bell-prep half hops to the other
  CommuteCnotCz,       // cnot past cz; shared target emits a bridging cz
  CommuteDisjoint,     // neighbours on disjoint qubit sets swap
  CommuteHRot,         // h q; rot axes swap: uz <-> ux across h
  CommuteUzCz,         // z rotation slides through cz on either endpoint
  CnotOnPlusPlus,      // cnot into a freshly prepared |+> target vanishes
  EquatorialToUzX,     // me(w) q <-> uz(-w) q; mx q
  BoxBellPrep,         // prep+ a; prep+ b; cz a b; h a <-> [bellprep a b]
  BoxBellMeas,         // h b; cz a b; mx a; mx b <-> [bellmeas a b]
  BoxGeneralizedBell,  // rotation before a Bell box folds into its basis
};

const char* rule_name(RewriteRule rule);
RewriteRule rule_from_name(const std::string& name);

// One rule application. site indexes into Circuit::ops. qubit is required
// by InsertHH (which wire the pair lands on) and by the inserting direction
// of CnotOnPlusPlus (the control); site2 optionally places the second h of
// InsertHH (default site + 1, counted after the first insertion).
struct RuleApplication {
  RewriteRule rule;
  std::size_t site = 0;
  std::optional<unsigned> qubit;
  std::optional<std::size_t> site2;
};

struct Applied {
  Circuit circuit;
  RuleApplication inverse;  // undoes this application byte for byte
};

Applied apply_rule(const Circuit& c, const RuleApplication& app);

// A validated rewrite derivation: start circuit plus the applications that
// turn it into the end circuit, with every intermediate recorded.
struct TraceStep {
  RuleApplication applied;
  RuleApplication inverse;
  Circuit circuit;  // state after the application
};

struct RewriteTrace {
  std::string name;
  Circuit start;
  std::vector<TraceStep> steps;

  const Circuit& end() const { return steps.empty() ? start : steps.back().circuit; }
  // Steps serialize as {rule, site, circuit_hash} records (plus qubit and
  // site2 when the rule takes them), bracketed by start and end circuits.
  std::string to_json() const;
};

// Replays the recorded inverses in reverse order. The result ends at the
// original start circuit byte for byte; a mismatch throws std::logic_error
// because it means a rule lied about its inverse.
RewriteTrace invert_trace(const RewriteTrace& t);

// The shipped derivations between the graph-state and teleportation
// pictures. Each returns a trace whose start is the direct circuit
// translation of the corresponding measurement pattern (or, for the
// teleportation CNOT, the two-pair gadget circuit) and whose end is the
// other model's form.
RewriteTrace map_wire_to_teleportation();
RewriteTrace map_rotation_to_generalized_bell(char axis, double angle);

enum class MapDirection { TqcToOneWay, OneWayToTqc };
RewriteTrace map_cnot_between_models(MapDirection direction);

// The teleportation-picture CNOT: two Bell pairs, a transversal cnot on the
// ancilla halves, Bell measurements gluing the inputs on, and the outcome
// corrections of the six-qubit cluster pattern.
Circuit cnot_teleport_circuit();

struct TraceReport {
  bool ok = false;
  unsigned steps = 0;
  unsigned branches = 0;  // live branches of the end circuit
  double worst_probability_gap = 0;
  double worst_fidelity_deficit = 0;
  std::string failure;  // empty when ok
};

// Replays a trace from its start, checking that every stored circuit
// matches the replay byte for byte, that every step preserves the channel
// within tol, and that the end circuit implements `intended` on all
// spanning inputs within tol.
TraceReport validate_trace(const RewriteTrace& t, const WireUnitary& intended,
                           double tol = 1e-10);

}  // namespace mbqc
