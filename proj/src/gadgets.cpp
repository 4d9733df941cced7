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

#include "mbqc/gadgets.hpp"

#include <stdexcept>
#include <utility>

#include "mbqc/gf2.hpp"

namespace mbqc {

namespace {

PauliString two_site(unsigned n, unsigned qa, Pauli pa, unsigned qb, Pauli pb) {
  PauliString p(n);
  p.set_letter(qa, pa);
  p.set_letter(qb, pb);
  return p;
}

// Register state with an entangled two-qubit wire payload at positions
// (c, t) and an ancilla register spread over anc_pos (most significant
// ancilla qubit first).
StateVector embed_wires(const StateVector& psi, unsigned n, unsigned c,
                        unsigned t, const StateVector& anc,
                        const std::vector<unsigned>& anc_pos) {
  if (psi.num_qubits() != 2 || anc.num_qubits() != anc_pos.size())
    throw std::invalid_argument("embed_wires: shape mismatch");
  auto bit_of = [n](size_t idx, unsigned q) -> size_t {
    return (idx >> (n - 1 - q)) & 1u;
  };
  std::vector<Complex> amps(size_t{1} << n);
  for (size_t idx = 0; idx < amps.size(); ++idx) {
    size_t w = (bit_of(idx, c) << 1) | bit_of(idx, t);
    size_t a = 0;
    for (unsigned i = 0; i < anc_pos.size(); ++i)
      a = (a << 1) | bit_of(idx, anc_pos[i]);
    amps[idx] = psi.amplitude(w) * anc.amplitude(a);
  }
  return StateVector::from_amplitudes(n, std::move(amps));
}

}  // namespace

Pauli sigma_letter(int index) {
  switch (index & 3) {
    case 1: return Pauli::X;
    case 2: return Pauli::Y;
    case 3: return Pauli::Z;
    default: return Pauli::I;
  }
}

void apply_sigma(StateVector& s, unsigned q, int index) {
  switch (index & 3) {
    case 1: s.apply_x(q); break;
    case 2: s.apply_y(q); break;
    case 3: s.apply_z(q); break;
    default: break;
  }
}

StateVector bell_pair() {
  StateVector s(2);
  s.apply_h(0);
  s.apply_cnot(0, 1);
  return s;
}

BellIndex bell_measure(StateVector& s, unsigned q1, unsigned q2,
                       OutcomePolicy& policy) {
  unsigned n = s.num_qubits();
  BellIndex j;
  j.j1 = s.measure_pauli_product(two_site(n, q1, Pauli::X, q2, Pauli::X),
                                 policy);
  j.j2 = s.measure_pauli_product(two_site(n, q1, Pauli::Z, q2, Pauli::Z),
                                 policy);
  return j;
}

BellIndex gen_bell_measure(StateVector& s, unsigned q1, unsigned q2,
                           const Mat2& u, OutcomePolicy& policy) {
  s.apply_mat2(q1, u);
  BellIndex j = bell_measure(s, q1, q2, policy);
  s.apply_mat2(q1, mat2_dagger(u));
  return j;
}

TeleportResult teleport_apply(const StateVector& psi, const Mat2& u,
                              bool rotate_ancilla, OutcomePolicy& policy) {
  if (psi.num_qubits() != 1)
    throw std::invalid_argument("teleport_apply: one-qubit payload expected");
  StateVector full = StateVector::kron(psi, bell_pair());
  BellIndex j;
  if (rotate_ancilla) {
    full.apply_mat2(2, u);
    j = bell_measure(full, 0, 1, policy);
  } else {
    j = gen_bell_measure(full, 0, 1, u, policy);
  }
  return {full.factor_keep({2}), j};
}

RusResult repeat_until_success(const StateVector& psi, const Mat2& u,
                               OutcomePolicy& policy, unsigned max_attempts) {
  if (psi.num_qubits() != 1)
    throw std::invalid_argument("repeat_until_success: one-qubit payload");
  StateVector state = psi;
  for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
    TeleportResult t = teleport_apply(state, u, false, policy);
    if (t.j.index() == 0) return {std::move(t.out), attempt};
    // Failed attempt left sigma_j u |psi>; unwind both factors and retry.
    state = std::move(t.out);
    apply_sigma(state, 0, t.j.index());
    state.apply_mat2(0, mat2_dagger(u));
  }
  throw std::runtime_error("repeat_until_success: attempt cap exhausted");
}

StateVector cnot_ancilla() {
  StateVector s(4);
  s.apply_h(0);
  s.apply_cnot(0, 1);
  s.apply_h(2);
  s.apply_cnot(2, 3);
  s.apply_cnot(1, 3);
  return s;
}

MeasuredPrep cnot_ancilla_by_measurement(OutcomePolicy& policy) {
  StateVector s(4);
  s.prep_plus(1);
  StabilizerTableau frame(4);
  frame.add_zero(0);
  frame.add_plus(1);
  frame.add_zero(2);
  frame.add_zero(3);

  const PauliString steps[3] = {PauliString::parse("+XIXI"),
                                PauliString::parse("+ZZII"),
                                PauliString::parse("+IIXX")};
  std::vector<FrameStep> transcript;
  for (const PauliString& obs : steps) {
    int outcome = s.measure_pauli_product(obs, policy);
    OutcomePolicy replay = OutcomePolicy::force({outcome});
    MeasurementRecord rec = frame.measure_pauli(obs, replay);
    if (rec.outcome != outcome)
      throw std::logic_error("frame and register outcomes disagree");
    transcript.push_back({obs, outcome, rec.deterministic});
  }

  // The frame group now matches the resource group up to signs. Express
  // each target generator as a product of frame rows to read its sign off,
  // then solve for a local Pauli that flips exactly the negative ones.
  const PauliString target[4] = {
      PauliString::parse("+XXIX"), PauliString::parse("+ZZII"),
      PauliString::parse("+IIXX"), PauliString::parse("+IZZZ")};
  auto x_bit = [](const PauliString& p, unsigned q) -> uint8_t {
    Pauli l = p.letter(q);
    return (l == Pauli::X || l == Pauli::Y) ? 1 : 0;
  };
  auto z_bit = [](const PauliString& p, unsigned q) -> uint8_t {
    Pauli l = p.letter(q);
    return (l == Pauli::Z || l == Pauli::Y) ? 1 : 0;
  };
  gf2::Matrix span(8, 4);
  for (unsigned j = 0; j < 4; ++j)
    for (unsigned q = 0; q < 4; ++q) {
      span.at(q, j) = x_bit(frame.stabilizer(j), q);
      span.at(4 + q, j) = z_bit(frame.stabilizer(j), q);
    }
  gf2::Matrix eqs(4, 8);
  std::vector<uint8_t> rhs(4);
  for (unsigned i = 0; i < 4; ++i) {
    std::vector<uint8_t> want(8);
    for (unsigned q = 0; q < 4; ++q) {
      want[q] = x_bit(target[i], q);
      want[4 + q] = z_bit(target[i], q);
    }
    auto subset = gf2::solve(span, want);
    if (!subset) throw std::logic_error("resource group letters missing");
    PauliString prod(4);
    for (unsigned j = 0; j < 4; ++j)
      if ((*subset)[j]) prod.multiply_right(frame.stabilizer(j));
    rhs[i] = static_cast<uint8_t>((prod.phase_exp() >> 1) & 1u);
    for (unsigned q = 0; q < 4; ++q) {
      eqs.at(i, q) = z_bit(target[i], q);
      eqs.at(i, 4 + q) = x_bit(target[i], q);
    }
  }
  auto sol = gf2::solve(eqs, rhs);
  if (!sol) throw std::logic_error("no local Pauli matches the frame signs");
  PauliString correction(4);
  for (unsigned q = 0; q < 4; ++q) {
    uint8_t x = (*sol)[q], z = (*sol)[4 + q];
    Pauli p = x ? (z ? Pauli::Y : Pauli::X) : (z ? Pauli::Z : Pauli::I);
    correction.set_letter(q, p);
  }
  s.apply_pauli_string(correction);
  return {std::move(s), std::move(transcript), std::move(correction)};
}

CnotGadgetResult cnot_via_ancilla(const StateVector& psi,
                                  OutcomePolicy& policy) {
  if (psi.num_qubits() != 2)
    throw std::invalid_argument("cnot_via_ancilla: two-qubit payload");
  StateVector full = StateVector::kron(psi, cnot_ancilla());
  BellIndex i1 = bell_measure(full, 0, 2, policy);
  BellIndex i2 = bell_measure(full, 1, 4, policy);
  StateVector out = full.factor_keep({3, 5});
  // The tails carry CNOT (sigma_{i1} o sigma_{i2}) |psi>; pushing the
  // byproduct through the gate gives the correction on the outputs.
  PauliString raw(2);
  raw.set_letter(0, sigma_letter(i1.index()));
  raw.set_letter(1, sigma_letter(i2.index()));
  PauliString correction =
      conjugate_by_clifford(raw, {CliffordKind::CNOT, 0, 1});
  correction.set_phase_exp(0);
  out.apply_pauli_string(correction);
  return {std::move(out), std::move(correction), i1, i2};
}

StateVector remote_cnot_circuit(const StateVector& psi,
                                OutcomePolicy& policy) {
  if (psi.num_qubits() != 2)
    throw std::invalid_argument("remote_cnot_circuit: two-qubit payload");
  StateVector full = embed_wires(psi, 4, 0, 3, bell_pair(), {1, 2});
  full.apply_cnot(0, 1);
  full.apply_cnot(2, 3);
  int a = full.measure_z(1, policy);
  int b = full.measure_x(2, policy);
  if (a) full.apply_x(3);
  if (b) full.apply_z(0);
  return full.factor_keep({0, 3});
}

namespace {

struct ProcedureSpec {
  unsigned n = 0;
  unsigned wire_c = 0;
  unsigned wire_t = 0;
  std::vector<unsigned> anc;
  enum class AncInit { EdgePair, Plus, Zero } init = AncInit::Plus;
  std::vector<PauliString> observables;
  std::vector<std::string> titles;  // one per observable
  std::vector<CliffordGate> intended;
};

ProcedureSpec spec_for(CzProcedure proc) {
  ProcedureSpec s;
  using Init = ProcedureSpec::AncInit;
  switch (proc) {
    case CzProcedure::TwoAncilla:
      s.n = 4;
      s.wire_c = 0;
      s.wire_t = 3;
      s.anc = {1, 2};
      s.init = Init::EdgePair;
      s.observables = {PauliString::parse("+ZXII"), PauliString::parse("+IIXZ"),
                       PauliString::parse("+IZII"), PauliString::parse("+IIZI")};
      s.titles = {"1a) Measure ZXII", "1b) Measure IIXZ", "2a) Measure IZII",
                  "2b) Measure IIZI"};
      s.intended = {{CliffordKind::CZ, 0, 3}};
      break;
    case CzProcedure::OneAncillaPlus:
      s.n = 3;
      s.wire_c = 0;
      s.wire_t = 2;
      s.anc = {1};
      s.init = Init::Plus;
      s.observables = {PauliString::parse("+ZZI"), PauliString::parse("+IXZ"),
                       PauliString::parse("+IZI")};
      s.intended = {{CliffordKind::CZ, 0, 2}};
      break;
    case CzProcedure::OneAncillaZero:
      s.n = 3;
      s.wire_c = 0;
      s.wire_t = 2;
      s.anc = {1};
      s.init = Init::Zero;
      s.observables = {PauliString::parse("+IXZ"), PauliString::parse("+ZZI"),
                       PauliString::parse("+IXI")};
      s.intended = {{CliffordKind::CZ, 0, 2}};
      break;
    case CzProcedure::OneAncillaCnot:
      s.n = 3;
      s.wire_c = 0;
      s.wire_t = 2;
      s.anc = {1};
      s.init = Init::Plus;
      s.observables = {PauliString::parse("+ZZI"), PauliString::parse("+IXX"),
                       PauliString::parse("+IZI")};
      s.intended = {{CliffordKind::CNOT, 0, 2}};
      break;
  }
  if (s.titles.empty()) {
    for (size_t i = 0; i < s.observables.size(); ++i)
      s.titles.push_back(std::to_string(i + 1) + ") Measure " +
                         s.observables[i].str().substr(1));
  }
  return s;
}

StateVector ancilla_state(const ProcedureSpec& s) {
  if (s.init == ProcedureSpec::AncInit::EdgePair) {
    StateVector a(2);
    a.prep_plus(0);
    a.prep_plus(1);
    a.apply_cz(0, 1);
    return a;
  }
  StateVector a(1);
  if (s.init == ProcedureSpec::AncInit::Plus) a.prep_plus(0);
  return a;
}

}  // namespace

FrameResult run_cz_procedure(CzProcedure proc, const StateVector& psi,
                             OutcomePolicy& policy) {
  if (psi.num_qubits() != 2)
    throw std::invalid_argument("run_cz_procedure: two-qubit payload");
  ProcedureSpec spec = spec_for(proc);

  StateVector full =
      embed_wires(psi, spec.n, spec.wire_c, spec.wire_t, ancilla_state(spec),
                  spec.anc);

  StabilizerTableau frame(spec.n);
  switch (spec.init) {
    case ProcedureSpec::AncInit::EdgePair:
      frame.add_edge_pair(spec.anc[0], spec.anc[1]);
      break;
    case ProcedureSpec::AncInit::Plus:
      frame.add_plus(spec.anc[0]);
      break;
    case ProcedureSpec::AncInit::Zero:
      frame.add_zero(spec.anc[0]);
      break;
  }
  const std::string c_tag = std::to_string(spec.wire_c + 1);
  const std::string t_tag = std::to_string(spec.wire_t + 1);
  frame.track("X_" + c_tag, PauliString(spec.n, spec.wire_c, Pauli::X));
  frame.track("Z_" + c_tag, PauliString(spec.n, spec.wire_c, Pauli::Z));
  frame.track("X_" + t_tag, PauliString(spec.n, spec.wire_t, Pauli::X));
  frame.track("Z_" + t_tag, PauliString(spec.n, spec.wire_t, Pauli::Z));

  std::vector<FrameStep> transcript;
  std::vector<std::string> blocks;
  blocks.push_back(frame.render("At start"));
  for (size_t i = 0; i < spec.observables.size(); ++i) {
    const PauliString& obs = spec.observables[i];
    int outcome = full.measure_pauli_product(obs, policy);
    OutcomePolicy replay = OutcomePolicy::force({outcome});
    MeasurementRecord rec = frame.measure_pauli(obs, replay);
    if (rec.outcome != outcome)
      throw std::logic_error("frame and register outcomes disagree");
    transcript.push_back({obs, outcome, rec.deterministic});
    if (i + 1 == spec.observables.size()) frame.reduce_tracked_over(spec.anc);
    blocks.push_back(frame.render(spec.titles[i]));
  }

  // The reduced logicals equal the intended images up to signs; the sign
  // pattern determines a wire Pauli through anticommutation parities.
  const std::string labels[4] = {"X_" + c_tag, "Z_" + c_tag, "X_" + t_tag,
                                 "Z_" + t_tag};
  const Pauli bases[4] = {Pauli::X, Pauli::Z, Pauli::X, Pauli::Z};
  const unsigned wires[4] = {spec.wire_c, spec.wire_c, spec.wire_t,
                             spec.wire_t};
  gf2::Matrix eqs(4, 4);
  std::vector<uint8_t> rhs(4);
  std::vector<PauliString> images(4);
  for (unsigned r = 0; r < 4; ++r) {
    PauliString base(spec.n, wires[r], bases[r]);
    images[r] = conjugate_by_circuit(base, spec.intended);
    const PauliString& got = frame.tracked_op(labels[r]);
    if (!got.equal_letters(images[r]))
      throw std::logic_error("frame letters diverge from the intended gate");
    rhs[r] = static_cast<uint8_t>(
        (((got.phase_exp() + 4 - images[r].phase_exp()) >> 1) & 1u));
    // Unknowns: [x_c, z_c, x_t, z_t]. A Pauli with x at w anticommutes with
    // the image iff the image has a z component there, and vice versa.
    const unsigned wire_pos[2] = {spec.wire_c, spec.wire_t};
    for (unsigned w = 0; w < 2; ++w) {
      Pauli m = images[r].letter(wire_pos[w]);
      uint8_t mx = (m == Pauli::X || m == Pauli::Y) ? 1 : 0;
      uint8_t mz = (m == Pauli::Z || m == Pauli::Y) ? 1 : 0;
      eqs.at(r, 2 * w + 0) = mz;
      eqs.at(r, 2 * w + 1) = mx;
    }
  }
  auto sol = gf2::solve(eqs, rhs);
  if (!sol) throw std::logic_error("no wire Pauli matches the frame signs");

  PauliString correction(spec.n);
  const unsigned wire_pos[2] = {spec.wire_c, spec.wire_t};
  for (unsigned w = 0; w < 2; ++w) {
    uint8_t x = (*sol)[2 * w + 0];
    uint8_t z = (*sol)[2 * w + 1];
    Pauli p = x ? (z ? Pauli::Y : Pauli::X) : (z ? Pauli::Z : Pauli::I);
    correction.set_letter(wire_pos[w], p);
  }
  full.apply_pauli_string(correction);
  return {full.factor_keep({spec.wire_c, spec.wire_t}), std::move(correction),
          std::move(transcript), std::move(blocks)};
}

std::vector<std::string> frame_walkthrough_blocks() {
  OutcomePolicy pol = OutcomePolicy::force({0, 0, 0, 0});
  StateVector psi(2);
  return run_cz_procedure(CzProcedure::TwoAncilla, psi, pol).blocks;
}

}  // namespace mbqc
