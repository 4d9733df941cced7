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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mbqc/pattern.hpp"
#include "mbqc/pauli.hpp"
#include "mbqc/policy.hpp"
#include "mbqc/statevector.hpp"

namespace mbqc {

// Gate-level circuit with classically controlled corrections. This is the
// common language the model-mapping rewrites operate on: measurement-pattern
// circuits (|+> preps, CZ entanglers, X / equatorial measurements) and
// teleportation circuits (Bell preparations and Bell measurements) are both
// expressible, as is every intermediate form.
//
// Classical data lives in a single outcome table indexed by bit id.
// Measurements write bits; angles and conditionals read them through
// AngleExpr / BitExpr. An op is allowed to read a bit that is only assigned
// later in the list: such circuits arise mid-rewrite when an outcome-signed
// rotation is commuted across the measurement that feeds it, and they stay
// meaningful under the forced-outcome semantics of run_forced. Only
// run_sampled insists on causal order.

struct PrepOp {
  unsigned qubit = 0;
  char basis = '+';  // '0' or '+'; the qubit must be untouched |0> so far
};

struct GateOp {
  CliffordGate gate;
};

// exp(-i angle/2 X) for axis 'x', exp(-i angle/2 Z) for axis 'z'.
struct RotOp {
  char axis = 'z';
  unsigned qubit = 0;
  AngleExpr angle;
};

// basis 'X', 'Z', or 'E' (equatorial; angle used only then). Outcome 0 is
// the +1 eigenvalue. The result lands in bit `bit`.
struct MeasureOp {
  char basis = 'X';
  unsigned qubit = 0;
  AngleExpr angle;
  unsigned bit = 0;
};

// Applies `op` on `qubit` when the parity `cond` evaluates to 1.
struct CondPauliOp {
  Pauli op = Pauli::I;
  unsigned qubit = 0;
  BitExpr cond;
};

// Prepares (|00> + |11>)/sqrt(2) on (q1, q2); both must be untouched |0>.
struct BellPrepOp {
  unsigned q1 = 0;
  unsigned q2 = 0;
};

// Measures X(x)X then Z(x)Z on (q1, q2); bit1 takes the XX outcome, bit2
// the ZZ outcome. The pair collapses to the Bell state indexed by the bits.
struct BellMeasureOp {
  unsigned q1 = 0;
  unsigned q2 = 0;
  unsigned bit1 = 0;
  unsigned bit2 = 0;
};

// Bell measurement in the rotated basis (R^dagger (x) I)|B_j> when side is
// 1, (I (x) R^dagger)|B_j> when side is 2, with R the axis rotation by
// `angle` acting on q1 or q2 respectively.
struct GenBellMeasureOp {
  char axis = 'z';
  AngleExpr angle;
  int side = 1;
  unsigned q1 = 0;
  unsigned q2 = 0;
  unsigned bit1 = 0;
  unsigned bit2 = 0;
};

using CircuitOp = std::variant<PrepOp, GateOp, RotOp, MeasureOp, CondPauliOp,
                               BellPrepOp, BellMeasureOp, GenBellMeasureOp>;

// Qubits the op acts on. Bit dependencies are deliberately excluded.
std::vector<unsigned> op_support(const CircuitOp& op);

bool ops_disjoint(const CircuitOp& a, const CircuitOp& b);

std::string op_text(const CircuitOp& op);

struct Circuit {
  unsigned num_qubits = 0;
  std::vector<unsigned> inputs;   // wire order; these qubits carry the input
  std::vector<unsigned> outputs;  // wire order; factored out after a run
  std::vector<CircuitOp> ops;

  // Sorted ids of every bit some measurement assigns.
  std::vector<unsigned> assigned_bits() const;

  // One op per line, deterministic formatting. Equal strings mean equal
  // circuits byte for byte; the rewrite inverse round-trip is checked on it.
  std::string pretty() const;

  // FNV-1a 64 over pretty().
  uint64_t hash() const;
};

struct Branch {
  double probability = 0;  // squared norm of the forced branch
  StateVector output;      // outputs only, normalized; |0..0> when p = 0
  Outcomes bits;
};

// Runs the circuit with every measurement outcome forced from `bits`
// (projecting without renormalizing), so conditionals may read outcomes
// that are assigned later in the op list. The surviving squared norm is the
// branch probability.
Branch run_forced(const Circuit& c, const StateVector& input,
                  const Outcomes& bits);

// All 2^k branches over the circuit's assigned bits. Bit ids are taken in
// sorted order with the first id toggling slowest.
std::vector<Branch> enumerate_forced_branches(const Circuit& c,
                                              const StateVector& input);

struct SampledRun {
  StateVector output;
  Outcomes bits;
};

// Samples outcomes through the policy, in op order. Throws std::logic_error
// when a conditional or an angle reads a bit that is not yet assigned.
SampledRun run_sampled(const Circuit& c, const StateVector& input,
                       OutcomePolicy& policy);

struct EquivalenceReport {
  bool equivalent = false;
  unsigned inputs_checked = 0;
  unsigned branches = 0;
  double worst_probability_gap = 0;
  double worst_fidelity_deficit = 0;  // over matched branches with weight
  // One entry per live branch of the first circuit: its outcome assignment
  // paired with the matched assignment of the second circuit. The identity
  // pairing is preferred when it works.
  std::vector<std::pair<Outcomes, Outcomes>> relabeling;
  std::string counterexample;  // empty when equivalent
};

// Channel equality witnessed branch by branch: searches for one outcome
// relabeling (a bijection between live branches) under which, on every
// spanning input, matched branches agree in probability within tol and in
// output state up to global phase (fidelity >= 1 - tol). When no such
// bijection exists the report carries a counterexample instead of a
// relabeling. Throws std::invalid_argument when wire counts differ.
EquivalenceReport verify_equivalence(const Circuit& a, const Circuit& b,
                                     double tol = 1e-9,
                                     double cutoff = 1e-12);

// Checks that every branch output equals u(input) for every spanning input
// and that branch probabilities sum to one.
EquivalenceReport verify_implements(const Circuit& c, const WireUnitary& u,
                                    double cutoff = 1e-12);

// The pattern as a circuit: |+> preps for non-inputs, one CZ per edge
// (output-side edges first), the plan's measurements with bit id = qubit
// id, then the byproduct rule as conditional Paulis on the outputs.
Circuit pattern_to_circuit(const Pattern& p);

// Order-insensitive structural summary: preps, CZ edges, measurement bases,
// conditionals, inputs and outputs, each section sorted. Two circuits with
// equal signatures implement the same measurement pattern. Throws
// std::logic_error if the circuit contains ops outside that shape (boxes,
// rotations, other gates).
std::string graph_form_signature(const Circuit& c);

bool matches_graph_pattern(const Circuit& c, const Pattern& p);

}  // namespace mbqc
