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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbqc/graph.hpp"
#include "mbqc/pauli.hpp"
#include "mbqc/policy.hpp"
#include "mbqc/statevector.hpp"

namespace mbqc {

using Outcomes = std::map<unsigned, int>;

// Affine parity over measurement outcomes: base + sum_{q in deps} s_q mod 2.
struct BitExpr {
  int base = 0;
  std::vector<unsigned> deps;

  int eval(const Outcomes& outcomes) const;
  bool operator==(const BitExpr&) const = default;
};

// Measurement angle whose sign flips with an outcome parity:
// (-1)^{sum_{q in deps} s_q} * base.
struct AngleExpr {
  double base = 0;
  std::vector<unsigned> deps;

  double eval(const Outcomes& outcomes) const;
};

enum class MeasBasis { X, Equatorial };

struct MeasureStep {
  unsigned qubit;
  MeasBasis basis = MeasBasis::X;
  AngleExpr angle;  // equatorial only
};

// Pauli left over on the outputs after a run: on output position o the
// operator X^{x[o]} Z^{z[o]}, up to global phase.
struct ByproductRule {
  std::vector<BitExpr> x;
  std::vector<BitExpr> z;

  bool empty() const { return x.empty() && z.empty(); }
};

// Graph-state measurement pattern. Non-input vertices start as |+>, edges
// are CZ entanglers, and the plan measures qubits in order. Wire i enters
// at inputs[i] and leaves at outputs[i].
struct Pattern {
  Graph graph;
  std::vector<unsigned> inputs;
  std::vector<unsigned> outputs;
  std::vector<MeasureStep> plan;
  ByproductRule byproduct;

  // Set when the realized map is a Clifford; gates act on wire indices.
  // Lets a composition push an incoming byproduct through symbolically.
  std::optional<std::vector<CliffordGate>> wire_clifford;

  // Bounding box of the standard planar layout, rows x cols.
  unsigned bbox_rows = 1;
  unsigned bbox_cols = 0;

  unsigned measured_count() const {
    return static_cast<unsigned>(plan.size());
  }

  std::string to_json() const;
  static Pattern from_json(const std::string& text);
};

struct ResourceCount {
  unsigned rows = 0;
  unsigned cols = 0;
  unsigned total = 0;
  unsigned measured = 0;
};

ResourceCount resources(const Pattern& p);

struct PatternRun {
  StateVector output;
  std::vector<std::pair<unsigned, int>> outcomes;  // (qubit, bit), plan order
};

// Runs the plan on |input> (one qubit per wire, in inputs order) and
// factors out the surviving output state.
PatternRun run_pattern(const Pattern& p, const StateVector& input,
                       OutcomePolicy& policy);

void apply_byproduct(StateVector& s, const ByproductRule& rule,
                     const Outcomes& outcomes);

// Applies the target unitary in place to a state on the wire qubits.
using WireUnitary = std::function<void(StateVector&)>;

// Inputs that pin down a Pauli byproduct uniquely: computational and
// phase-sensitive basis states plus one fixed full-support state.
std::vector<StateVector> spanning_states(unsigned wires);

// Enumerates every outcome branch, finds the unique Pauli correction that
// maps each branch output onto u(input) for all spanning inputs, and fits
// the exponents as affine parities of the outcomes. Throws if any branch
// has no (or no unique) correction or if the fit is inconsistent.
ByproductRule derive_byproduct_rule(const Pattern& p, const WireUnitary& u);

struct ValidationReport {
  unsigned branches = 0;
  double worst_fidelity_deficit = 0;
};

// Checks p.byproduct against u on every branch and every spanning input,
// and that each planned measurement is genuinely random.
ValidationReport validate_pattern(const Pattern& p, const WireUnitary& u,
                                  double tol = kAmpTol);

// Joins b after a, identifying a.outputs with b.inputs. Incoming byproducts
// are compensated in b's measurement angles (chain patterns) or conjugated
// through b's Clifford action, and the composite rule is rebuilt.
Pattern compose_patterns(const Pattern& a, const Pattern& b);

// Removes adjacent pairs of X-measured, degree-2, non-terminal qubits
// (identity wire segments), reconnecting their neighbors. Dropped outcomes
// vanish from every dependency set.
Pattern eliminate_redundant_wires(const Pattern& p);

Pattern pattern_wire();
Pattern pattern_xrot(double phi);    // exp(-i phi X / 2)
Pattern pattern_zrot(double theta);  // exp(-i theta Z / 2)
// Uz(psi) Ux(theta) Uz(phi), rightmost factor first.
Pattern pattern_euler(double psi, double theta, double phi);
Pattern pattern_cnot6();
Pattern pattern_cnot_square();
Pattern pattern_remote_cz();

WireUnitary unitary_identity(unsigned wires);
WireUnitary unitary_xrot(double phi);
WireUnitary unitary_zrot(double theta);
WireUnitary unitary_euler(double psi, double theta, double phi);
WireUnitary unitary_cnot();
WireUnitary unitary_cz();

}  // namespace mbqc
