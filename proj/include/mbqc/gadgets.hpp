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

#include <string>
#include <vector>

#include "mbqc/pauli.hpp"
#include "mbqc/policy.hpp"
#include "mbqc/statevector.hpp"
#include "mbqc/tableau.hpp"

namespace mbqc {

// Bell basis label: |B_j> = (sigma_j o I)|B_0| with sigma = {I, X, Y, Z}
// and |B_0> the uniform pair. j1 is the X o X outcome, j2 the Z o Z
// outcome; the index reads j = (j1, j1 xor j2) as two bits.
struct BellIndex {
  int j1 = 0;
  int j2 = 0;

  int index() const { return (j1 << 1) | (j1 ^ j2); }
};

// sigma_index as a letter: 0 -> I, 1 -> X, 2 -> Y, 3 -> Z.
Pauli sigma_letter(int index);
void apply_sigma(StateVector& s, unsigned q, int index);

StateVector bell_pair();

BellIndex bell_measure(StateVector& s, unsigned q1, unsigned q2,
                       OutcomePolicy& policy);

// Measurement in the rotated basis {(U^dagger o I)|B_j>} on (q1, q2):
// U on q1, plain Bell measurement, U^dagger back.
BellIndex gen_bell_measure(StateVector& s, unsigned q1, unsigned q2,
                           const Mat2& u, OutcomePolicy& policy);

struct TeleportResult {
  StateVector out;  // single qubit
  BellIndex j;
};

// Teleports a one-qubit state through an entangled pair while applying u.
// With rotate_ancilla, the pair is prepared as (I o u)|B_0> and the output
// is u sigma_j |psi|; otherwise the measurement basis absorbs u and the
// output is sigma_j u |psi|. No correction is applied.
TeleportResult teleport_apply(const StateVector& psi, const Mat2& u,
                              bool rotate_ancilla, OutcomePolicy& policy);

struct RusResult {
  StateVector out;
  unsigned attempts = 0;
};

// Repeats basis-side teleportation of u until the trivial Bell outcome
// lands; failures are unwound with sigma_j then u^dagger. Each attempt
// succeeds with probability 1/4.
RusResult repeat_until_success(const StateVector& psi, const Mat2& u,
                               OutcomePolicy& policy,
                               unsigned max_attempts = 1000);

// The four-qubit entangler resource: (CNOT between the pair tails) applied
// to two uniform pairs. Stabilized by XXIX, ZZII, IIXX, IZZZ.
StateVector cnot_ancilla();

struct FrameStep {
  PauliString observable;
  int outcome = 0;
  bool deterministic = false;
};

struct MeasuredPrep {
  StateVector state;  // equals cnot_ancilla() once corrected
  std::vector<FrameStep> transcript;
  PauliString correction;
};

// Builds the entangler resource from |0,+,0,0> with three weight-2
// measurements (XIXI, ZZII, IIXX) plus an outcome-dependent local Pauli
// solved from a stabilizer frame.
MeasuredPrep cnot_ancilla_by_measurement(OutcomePolicy& policy);

struct CnotGadgetResult {
  StateVector out;          // two qubits, correction already applied
  PauliString correction;   // what was applied, over the two outputs
  BellIndex i1, i2;
};

// Entangling gate by measurements only: Bell-measures the inputs against
// the head qubits of the four-qubit resource and corrects the tails.
CnotGadgetResult cnot_via_ancilla(const StateVector& psi, OutcomePolicy& policy);

// One-ancilla-pair circuit form: CNOTs onto a shared pair, one Z and one X
// readout, Pauli fixups. Returns the corrected two-qubit state.
StateVector remote_cnot_circuit(const StateVector& psi,
                                OutcomePolicy& policy);

// Remote entangling procedures built from two-qubit measurements.
//  TwoAncilla:      pair ancilla, ZX / XZ probes, two Z readouts (CZ).
//  OneAncillaPlus:  |+> ancilla, ZZ then XZ probes, Z readout (CZ).
//  OneAncillaZero:  |0> ancilla, XZ then ZZ probes, X readout (CZ).
//  OneAncillaCnot:  |+> ancilla, ZZ then XX probes, Z readout (CNOT).
enum class CzProcedure {
  TwoAncilla,
  OneAncillaPlus,
  OneAncillaZero,
  OneAncillaCnot,
};

struct FrameResult {
  StateVector out;         // the two wires, correction already applied
  PauliString correction;  // over the full register
  std::vector<FrameStep> transcript;
  std::vector<std::string> blocks;  // rendered tableau frame, one per step
};

// Runs a procedure on a dense register while a stabilizer frame tracks the
// logical operators; the frame's signs determine the Pauli correction.
FrameResult run_cz_procedure(CzProcedure proc, const StateVector& psi,
                             OutcomePolicy& policy);

// The two-ancilla frame at fixed all-plus outcomes, rendered block by
// block with the round labels used in protocol write-ups.
std::vector<std::string> frame_walkthrough_blocks();

}  // namespace mbqc
