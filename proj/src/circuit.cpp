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

#include "mbqc/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace mbqc {
namespace {

// Branches below this weight are numerically dead: real branch weights in
// this codebase are dyadic fractions of at most ~2^-20.
constexpr double kDeadBranch = 1e-24;

std::string num_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string bit_name(unsigned b) { return "b" + std::to_string(b); }

// "0.5" alone, or "0.5; b0,b2" when the sign flips with an outcome parity.
std::string angle_text(const AngleExpr& a) {
  std::string s = num_text(a.base);
  if (!a.deps.empty()) {
    s += "; ";
    for (std::size_t i = 0; i < a.deps.size(); ++i) {
      if (i) s += ",";
      s += bit_name(a.deps[i]);
    }
  }
  return s;
}

std::string cond_text(const BitExpr& e) {
  std::string s;
  if (e.base) s = "1";
  for (unsigned d : e.deps) {
    if (!s.empty()) s += "^";
    s += bit_name(d);
  }
  return s.empty() ? "0" : s;
}

const char* gate_name(CliffordKind k) {
  switch (k) {
    case CliffordKind::H: return "h";
    case CliffordKind::S: return "s";
    case CliffordKind::X: return "x";
    case CliffordKind::Y: return "y";
    case CliffordKind::Z: return "z";
    case CliffordKind::CNOT: return "cnot";
    case CliffordKind::CZ: return "cz";
  }
  throw std::logic_error("unknown gate kind");
}

bool two_qubit(CliffordKind k) {
  return k == CliffordKind::CNOT || k == CliffordKind::CZ;
}

PauliString single(unsigned n, unsigned q, Pauli p) {
  return PauliString(n, q, p);
}

PauliString pair_obs(unsigned n, unsigned a, unsigned b, Pauli p) {
  PauliString s(n);
  s.set_letter(a, p);
  s.set_letter(b, p);
  return s;
}

StateVector embed_at(const StateVector& in, unsigned n,
                     const std::vector<unsigned>& at) {
  const unsigned k = in.num_qubits();
  if (at.size() != k) {
    throw std::invalid_argument("input state size does not match wire count");
  }
  std::vector<Complex> amps(std::size_t{1} << n, Complex{0, 0});
  for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) {
    std::size_t idx = 0;
    for (unsigned i = 0; i < k; ++i) {
      if (j & (std::size_t{1} << (k - 1 - i))) {
        idx |= std::size_t{1} << (n - 1 - at[i]);
      }
    }
    amps[idx] = in.amplitude(j);
  }
  return StateVector::from_amplitudes(n, std::move(amps));
}

void apply_axis_rot(StateVector& s, char axis, unsigned q, double angle) {
  if (axis == 'x') {
    s.apply_ux(q, angle);
  } else if (axis == 'z') {
    s.apply_uz(q, angle);
  } else {
    throw std::invalid_argument("unknown rotation axis");
  }
}

void check_assigned(const Outcomes& bits, const std::vector<unsigned>& deps) {
  for (unsigned d : deps) {
    if (!bits.count(d)) {
      throw std::logic_error("op reads unassigned bit " + bit_name(d));
    }
  }
}

int forced_outcome(const Outcomes& bits, unsigned bit) {
  auto it = bits.find(bit);
  if (it == bits.end()) {
    throw std::invalid_argument("no forced outcome for " + bit_name(bit));
  }
  return it->second & 1;
}

// Projects a single measurement without renormalizing. Equatorial bases are
// handled by rotating the basis onto X and back, so the post-measurement
// state is the actual basis vector.
void project_measure(StateVector& s, const MeasureOp& m, int outcome,
                     double omega) {
  const unsigned n = s.num_qubits();
  switch (m.basis) {
    case 'X':
      s.project_unnormalized(single(n, m.qubit, Pauli::X), outcome);
      return;
    case 'Z':
      s.project_unnormalized(single(n, m.qubit, Pauli::Z), outcome);
      return;
    case 'E':
      s.apply_uz(m.qubit, -omega);
      s.project_unnormalized(single(n, m.qubit, Pauli::X), outcome);
      s.apply_uz(m.qubit, omega);
      return;
    default:
      throw std::invalid_argument("unknown measurement basis");
  }
}

void exec_forced(StateVector& s, const CircuitOp& op, const Outcomes& bits) {
  const unsigned n = s.num_qubits();
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, PrepOp>) {
          if (o.basis == '+') {
            s.prep_plus(o.qubit);
          } else if (o.basis != '0') {
            throw std::invalid_argument("unknown preparation basis");
          }
        } else if constexpr (std::is_same_v<T, GateOp>) {
          s.apply_clifford(o.gate);
        } else if constexpr (std::is_same_v<T, RotOp>) {
          apply_axis_rot(s, o.axis, o.qubit, o.angle.eval(bits));
        } else if constexpr (std::is_same_v<T, MeasureOp>) {
          const double omega = o.basis == 'E' ? o.angle.eval(bits) : 0.0;
          project_measure(s, o, forced_outcome(bits, o.bit), omega);
        } else if constexpr (std::is_same_v<T, CondPauliOp>) {
          if (o.cond.eval(bits)) {
            s.apply_pauli_string(single(n, o.qubit, o.op));
          }
        } else if constexpr (std::is_same_v<T, BellPrepOp>) {
          s.prep_plus(o.q1);
          s.apply_cnot(o.q1, o.q2);
        } else if constexpr (std::is_same_v<T, BellMeasureOp>) {
          s.project_unnormalized(pair_obs(n, o.q1, o.q2, Pauli::X),
                                 forced_outcome(bits, o.bit1));
          s.project_unnormalized(pair_obs(n, o.q1, o.q2, Pauli::Z),
                                 forced_outcome(bits, o.bit2));
        } else if constexpr (std::is_same_v<T, GenBellMeasureOp>) {
          const unsigned rq = o.side == 1 ? o.q1 : o.q2;
          const double angle = o.angle.eval(bits);
          apply_axis_rot(s, o.axis, rq, angle);
          s.project_unnormalized(pair_obs(n, o.q1, o.q2, Pauli::X),
                                 forced_outcome(bits, o.bit1));
          s.project_unnormalized(pair_obs(n, o.q1, o.q2, Pauli::Z),
                                 forced_outcome(bits, o.bit2));
          apply_axis_rot(s, o.axis, rq, -angle);
        }
      },
      op);
}

void exec_sampled(StateVector& s, const CircuitOp& op, Outcomes& bits,
                  OutcomePolicy& policy) {
  const unsigned n = s.num_qubits();
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, PrepOp>) {
          if (o.basis == '+') {
            s.prep_plus(o.qubit);
          } else if (o.basis != '0') {
            throw std::invalid_argument("unknown preparation basis");
          }
        } else if constexpr (std::is_same_v<T, GateOp>) {
          s.apply_clifford(o.gate);
        } else if constexpr (std::is_same_v<T, RotOp>) {
          check_assigned(bits, o.angle.deps);
          apply_axis_rot(s, o.axis, o.qubit, o.angle.eval(bits));
        } else if constexpr (std::is_same_v<T, MeasureOp>) {
          if (o.basis == 'E') {
            check_assigned(bits, o.angle.deps);
            bits[o.bit] =
                s.measure_equatorial(o.qubit, o.angle.eval(bits), policy);
          } else if (o.basis == 'X') {
            bits[o.bit] =
                s.measure_pauli_product(single(n, o.qubit, Pauli::X), policy);
          } else if (o.basis == 'Z') {
            bits[o.bit] =
                s.measure_pauli_product(single(n, o.qubit, Pauli::Z), policy);
          } else {
            throw std::invalid_argument("unknown measurement basis");
          }
        } else if constexpr (std::is_same_v<T, CondPauliOp>) {
          check_assigned(bits, o.cond.deps);
          if (o.cond.eval(bits)) {
            s.apply_pauli_string(single(n, o.qubit, o.op));
          }
        } else if constexpr (std::is_same_v<T, BellPrepOp>) {
          s.prep_plus(o.q1);
          s.apply_cnot(o.q1, o.q2);
        } else if constexpr (std::is_same_v<T, BellMeasureOp>) {
          bits[o.bit1] =
              s.measure_pauli_product(pair_obs(n, o.q1, o.q2, Pauli::X),
                                      policy);
          bits[o.bit2] =
              s.measure_pauli_product(pair_obs(n, o.q1, o.q2, Pauli::Z),
                                      policy);
        } else if constexpr (std::is_same_v<T, GenBellMeasureOp>) {
          check_assigned(bits, o.angle.deps);
          const unsigned rq = o.side == 1 ? o.q1 : o.q2;
          const double angle = o.angle.eval(bits);
          apply_axis_rot(s, o.axis, rq, angle);
          bits[o.bit1] =
              s.measure_pauli_product(pair_obs(n, o.q1, o.q2, Pauli::X),
                                      policy);
          bits[o.bit2] =
              s.measure_pauli_product(pair_obs(n, o.q1, o.q2, Pauli::Z),
                                      policy);
          apply_axis_rot(s, o.axis, rq, -angle);
        }
      },
      op);
}

std::string join_wires(const std::vector<unsigned>& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<unsigned> sorted_copy(std::vector<unsigned> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<unsigned> op_support(const CircuitOp& op) {
  return std::visit(
      [](const auto& o) -> std::vector<unsigned> {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, PrepOp>) {
          return {o.qubit};
        } else if constexpr (std::is_same_v<T, GateOp>) {
          if (two_qubit(o.gate.kind)) return {o.gate.q0, o.gate.q1};
          return {o.gate.q0};
        } else if constexpr (std::is_same_v<T, RotOp>) {
          return {o.qubit};
        } else if constexpr (std::is_same_v<T, MeasureOp>) {
          return {o.qubit};
        } else if constexpr (std::is_same_v<T, CondPauliOp>) {
          return {o.qubit};
        } else {
          return {o.q1, o.q2};
        }
      },
      op);
}

bool ops_disjoint(const CircuitOp& a, const CircuitOp& b) {
  for (unsigned qa : op_support(a)) {
    for (unsigned qb : op_support(b)) {
      if (qa == qb) return false;
    }
  }
  return true;
}

std::string op_text(const CircuitOp& op) {
  return std::visit(
      [](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, PrepOp>) {
          return std::string("prep") + o.basis + " " + std::to_string(o.qubit);
        } else if constexpr (std::is_same_v<T, GateOp>) {
          std::string s = gate_name(o.gate.kind);
          s += " " + std::to_string(o.gate.q0);
          if (two_qubit(o.gate.kind)) s += " " + std::to_string(o.gate.q1);
          return s;
        } else if constexpr (std::is_same_v<T, RotOp>) {
          return std::string("u") + o.axis + "(" + angle_text(o.angle) + ") " +
                 std::to_string(o.qubit);
        } else if constexpr (std::is_same_v<T, MeasureOp>) {
          std::string s = "m";
          if (o.basis == 'E') {
            s += "e(" + angle_text(o.angle) + ")";
          } else {
            s += o.basis == 'X' ? "x" : "z";
          }
          return s + " " + std::to_string(o.qubit) + " -> " + bit_name(o.bit);
        } else if constexpr (std::is_same_v<T, CondPauliOp>) {
          const char letter = "ixyz"[static_cast<int>(o.op)];
          return std::string("cp") + letter + "[" + cond_text(o.cond) + "] " +
                 std::to_string(o.qubit);
        } else if constexpr (std::is_same_v<T, BellPrepOp>) {
          // Boxed ops render in brackets to mark teleportation primitives.
          return "[bellprep " + std::to_string(o.q1) + " " +
                 std::to_string(o.q2) + "]";
        } else if constexpr (std::is_same_v<T, BellMeasureOp>) {
          return "[bellmeas " + std::to_string(o.q1) + " " +
                 std::to_string(o.q2) + " -> " + bit_name(o.bit1) + " " +
                 bit_name(o.bit2) + "]";
        } else {
          static_assert(std::is_same_v<T, GenBellMeasureOp>);
          return std::string("[genbell ") + o.axis + "(" +
                 angle_text(o.angle) + ") side=" + std::to_string(o.side) +
                 " " + std::to_string(o.q1) + " " + std::to_string(o.q2) +
                 " -> " + bit_name(o.bit1) + " " + bit_name(o.bit2) + "]";
        }
      },
      op);
}

std::vector<unsigned> Circuit::assigned_bits() const {
  std::set<unsigned> seen;
  auto add = [&seen](unsigned b) {
    if (!seen.insert(b).second) {
      throw std::logic_error("bit assigned twice: " + bit_name(b));
    }
  };
  for (const CircuitOp& op : ops) {
    if (const auto* m = std::get_if<MeasureOp>(&op)) {
      add(m->bit);
    } else if (const auto* bm = std::get_if<BellMeasureOp>(&op)) {
      add(bm->bit1);
      add(bm->bit2);
    } else if (const auto* gb = std::get_if<GenBellMeasureOp>(&op)) {
      add(gb->bit1);
      add(gb->bit2);
    }
  }
  return {seen.begin(), seen.end()};
}

std::string Circuit::pretty() const {
  std::string s = "circuit n=" + std::to_string(num_qubits) +
                  " in=" + join_wires(inputs) + " out=" + join_wires(outputs) +
                  "\n";
  for (const CircuitOp& op : ops) s += "  " + op_text(op) + "\n";
  return s;
}

uint64_t Circuit::hash() const {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : pretty()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

Branch run_forced(const Circuit& c, const StateVector& input,
                  const Outcomes& bits) {
  StateVector s = embed_at(input, c.num_qubits, c.inputs);
  for (const CircuitOp& op : c.ops) exec_forced(s, op, bits);

  const double nr = s.norm();
  const double p = nr * nr;
  Outcomes assigned;
  for (unsigned b : c.assigned_bits()) assigned[b] = forced_outcome(bits, b);

  const auto wires = static_cast<unsigned>(c.outputs.size());
  if (p < kDeadBranch) {
    return {0.0, StateVector(wires), std::move(assigned)};
  }
  s.normalize();
  return {p, s.factor_keep(c.outputs), std::move(assigned)};
}

std::vector<Branch> enumerate_forced_branches(const Circuit& c,
                                              const StateVector& input) {
  const std::vector<unsigned> ids = c.assigned_bits();
  const auto k = static_cast<unsigned>(ids.size());
  if (k > 20) throw std::invalid_argument("too many bits to enumerate");
  std::vector<Branch> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Outcomes bits;
    for (unsigned i = 0; i < k; ++i) {
      bits[ids[i]] = static_cast<int>((mask >> (k - 1 - i)) & 1u);
    }
    out.push_back(run_forced(c, input, bits));
  }
  return out;
}

SampledRun run_sampled(const Circuit& c, const StateVector& input,
                       OutcomePolicy& policy) {
  StateVector s = embed_at(input, c.num_qubits, c.inputs);
  Outcomes bits;
  for (const CircuitOp& op : c.ops) exec_sampled(s, op, bits, policy);
  return {s.factor_keep(c.outputs), std::move(bits)};
}

namespace {

// One forced branch of a circuit, with its behaviour on every spanning
// input collected side by side so relabeling candidates can be compared
// input-wise.
struct BranchProfile {
  Outcomes bits;
  std::vector<double> prob;
  std::vector<StateVector> out;
  bool live = false;  // above cutoff on at least one input
};

std::vector<BranchProfile> collect_profiles(const Circuit& c,
                                            const std::vector<StateVector>& ins,
                                            double cutoff) {
  std::vector<BranchProfile> data;
  for (const StateVector& in : ins) {
    std::vector<Branch> br = enumerate_forced_branches(c, in);
    if (data.empty()) {
      data.resize(br.size());
      for (std::size_t i = 0; i < br.size(); ++i) data[i].bits = br[i].bits;
    }
    for (std::size_t i = 0; i < br.size(); ++i) {
      if (br[i].probability > cutoff) data[i].live = true;
      data[i].prob.push_back(br[i].probability);
      data[i].out.push_back(std::move(br[i].output));
    }
  }
  return data;
}

std::string bits_text(const Outcomes& bits) {
  std::string s;
  for (const auto& [id, v] : bits) {
    if (!s.empty()) s += " ";
    s += bit_name(id) + "=" + std::to_string(v);
  }
  return s.empty() ? "(no bits)" : s;
}

bool augment(std::size_t ia,
             const std::vector<std::vector<std::size_t>>& cand,
             std::vector<char>& visited, std::vector<int>& match_b) {
  for (std::size_t ib : cand[ia]) {
    if (visited[ib]) continue;
    visited[ib] = 1;
    if (match_b[ib] < 0 ||
        augment(static_cast<std::size_t>(match_b[ib]), cand, visited,
                match_b)) {
      match_b[ib] = static_cast<int>(ia);
      return true;
    }
  }
  return false;
}

}  // namespace

EquivalenceReport verify_equivalence(const Circuit& a, const Circuit& b,
                                     double tol, double cutoff) {
  if (a.inputs.size() != b.inputs.size()) {
    throw std::invalid_argument("circuits have different wire counts");
  }
  EquivalenceReport rep;
  const auto wires = static_cast<unsigned>(a.inputs.size());
  const std::vector<StateVector> ins = spanning_states(wires);
  rep.inputs_checked = static_cast<unsigned>(ins.size());

  const std::vector<BranchProfile> da = collect_profiles(a, ins, cutoff);
  const std::vector<BranchProfile> db = collect_profiles(b, ins, cutoff);

  for (std::size_t idx = 0; idx < ins.size(); ++idx) {
    double sum_a = 0;
    double sum_b = 0;
    for (const BranchProfile& p : da) sum_a += p.prob[idx];
    for (const BranchProfile& p : db) sum_b += p.prob[idx];
    rep.worst_probability_gap = std::max(
        {rep.worst_probability_gap, std::abs(sum_a - 1), std::abs(sum_b - 1)});
  }

  std::vector<std::size_t> live_a, live_b;
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i].live) live_a.push_back(i);
  }
  for (std::size_t i = 0; i < db.size(); ++i) {
    if (db[i].live) live_b.push_back(i);
  }
  rep.branches = static_cast<unsigned>(live_a.size());
  if (live_a.size() != live_b.size()) {
    rep.counterexample = "live branch counts differ: " +
                         std::to_string(live_a.size()) + " vs " +
                         std::to_string(live_b.size());
    return rep;
  }

  // Compatibility: matched branches must agree in probability on every
  // input and in output state wherever both carry weight.
  const auto compatible = [&](std::size_t ia, std::size_t ib) {
    const BranchProfile& pa = da[ia];
    const BranchProfile& pb = db[ib];
    for (std::size_t idx = 0; idx < ins.size(); ++idx) {
      if (std::abs(pa.prob[idx] - pb.prob[idx]) > tol) return false;
      if (pa.prob[idx] > cutoff && pb.prob[idx] > cutoff &&
          1.0 - pa.out[idx].fidelity(pb.out[idx]) > tol) {
        return false;
      }
    }
    return true;
  };

  // Candidate lists for Kuhn's matching, identity pairing first so the
  // reported relabeling is the least surprising one that works.
  std::vector<std::vector<std::size_t>> cand(live_a.size());
  for (std::size_t u = 0; u < live_a.size(); ++u) {
    std::vector<std::size_t> same, rest;
    for (std::size_t v = 0; v < live_b.size(); ++v) {
      if (!compatible(live_a[u], live_b[v])) continue;
      (da[live_a[u]].bits == db[live_b[v]].bits ? same : rest).push_back(v);
    }
    cand[u] = std::move(same);
    cand[u].insert(cand[u].end(), rest.begin(), rest.end());
  }

  std::vector<int> match_b(live_b.size(), -1);
  for (std::size_t u = 0; u < live_a.size(); ++u) {
    std::vector<char> visited(live_b.size(), 0);
    if (!augment(u, cand, visited, match_b)) {
      const BranchProfile& pa = da[live_a[u]];
      std::string probs;
      for (double p : pa.prob) probs += " " + num_text(p);
      rep.counterexample = "branch " + bits_text(pa.bits) +
                           " of the first circuit has no compatible partner"
                           " (probabilities per input:" +
                           probs + ")";
      return rep;
    }
  }

  rep.equivalent = true;
  std::vector<int> match_a(live_a.size(), -1);
  for (std::size_t v = 0; v < live_b.size(); ++v) {
    if (match_b[v] >= 0) match_a[static_cast<std::size_t>(match_b[v])] = static_cast<int>(v);
  }
  for (std::size_t u = 0; u < live_a.size(); ++u) {
    const std::size_t ia = live_a[u];
    const std::size_t ib = live_b[static_cast<std::size_t>(match_a[u])];
    rep.relabeling.emplace_back(da[ia].bits, db[ib].bits);
    for (std::size_t idx = 0; idx < ins.size(); ++idx) {
      rep.worst_probability_gap =
          std::max(rep.worst_probability_gap,
                   std::abs(da[ia].prob[idx] - db[ib].prob[idx]));
      if (da[ia].prob[idx] > cutoff && db[ib].prob[idx] > cutoff) {
        rep.worst_fidelity_deficit =
            std::max(rep.worst_fidelity_deficit,
                     1.0 - da[ia].out[idx].fidelity(db[ib].out[idx]));
      }
    }
  }
  return rep;
}

EquivalenceReport verify_implements(const Circuit& c, const WireUnitary& u,
                                    double cutoff) {
  EquivalenceReport rep;
  const auto wires = static_cast<unsigned>(c.inputs.size());
  for (const StateVector& in : spanning_states(wires)) {
    StateVector expected = in;
    u(expected);
    double sum = 0;
    for (const Branch& br : enumerate_forced_branches(c, in)) {
      sum += br.probability;
      if (br.probability > cutoff) {
        const double deficit = 1.0 - br.output.fidelity(expected);
        rep.worst_fidelity_deficit =
            std::max(rep.worst_fidelity_deficit, deficit);
      }
      rep.branches++;
    }
    rep.worst_probability_gap =
        std::max(rep.worst_probability_gap, std::abs(sum - 1));
    rep.inputs_checked++;
  }
  return rep;
}

Circuit pattern_to_circuit(const Pattern& p) {
  Circuit c;
  c.num_qubits = p.graph.n;
  c.inputs = p.inputs;
  c.outputs = p.outputs;

  std::set<unsigned> is_input(p.inputs.begin(), p.inputs.end());
  for (unsigned q = 0; q < p.graph.n; ++q) {
    if (!is_input.count(q)) c.ops.push_back(PrepOp{q, '+'});
  }
  // Entanglers come out output side first, so the translation of a wire-like
  // pattern keeps each input-side entangler adjacent to the measurements
  // that consume it. The CZ ops commute, so any order is equivalent.
  for (auto it = p.graph.edges.rbegin(); it != p.graph.edges.rend(); ++it) {
    c.ops.push_back(GateOp{{CliffordKind::CZ, it->first, it->second}});
  }
  for (const MeasureStep& step : p.plan) {
    MeasureOp m;
    m.qubit = step.qubit;
    m.bit = step.qubit;
    if (step.basis == MeasBasis::Equatorial) {
      m.basis = 'E';
      m.angle = step.angle;
    }
    c.ops.push_back(m);
  }
  // Byproduct order matches apply_byproduct: X layer, then Z layer. Either
  // order undoes the recorded operator up to global phase.
  for (unsigned o = 0; o < p.byproduct.x.size(); ++o) {
    const BitExpr& e = p.byproduct.x[o];
    if (e.base == 0 && e.deps.empty()) continue;
    c.ops.push_back(CondPauliOp{Pauli::X, p.outputs[o], e});
  }
  for (unsigned o = 0; o < p.byproduct.z.size(); ++o) {
    const BitExpr& e = p.byproduct.z[o];
    if (e.base == 0 && e.deps.empty()) continue;
    c.ops.push_back(CondPauliOp{Pauli::Z, p.outputs[o], e});
  }
  return c;
}

std::string graph_form_signature(const Circuit& c) {
  std::set<std::string> preps, edges, meas, conds;
  for (const CircuitOp& op : c.ops) {
    if (const auto* pr = std::get_if<PrepOp>(&op)) {
      if (pr->basis != '+') {
        throw std::logic_error("graph form allows |+> preparations only");
      }
      preps.insert(op_text(op));
    } else if (const auto* g = std::get_if<GateOp>(&op)) {
      if (g->gate.kind != CliffordKind::CZ) {
        throw std::logic_error("graph form allows CZ gates only");
      }
      const unsigned a = std::min(g->gate.q0, g->gate.q1);
      const unsigned b = std::max(g->gate.q0, g->gate.q1);
      edges.insert("edge " + std::to_string(a) + "-" + std::to_string(b));
    } else if (const auto* m = std::get_if<MeasureOp>(&op)) {
      if (m->basis != 'X' && m->basis != 'E') {
        throw std::logic_error("graph form allows X/equatorial bases only");
      }
      MeasureOp canon = *m;
      canon.angle.deps = sorted_copy(canon.angle.deps);
      meas.insert(op_text(canon));
    } else if (const auto* cp = std::get_if<CondPauliOp>(&op)) {
      CondPauliOp canon = *cp;
      canon.cond.deps = sorted_copy(canon.cond.deps);
      conds.insert(op_text(canon));
    } else {
      throw std::logic_error("graph form excludes boxed ops");
    }
  }
  std::string s = "in=" + join_wires(c.inputs) +
                  " out=" + join_wires(c.outputs) + "\n";
  for (const auto& group : {preps, edges, meas, conds}) {
    for (const std::string& line : group) s += line + "\n";
  }
  return s;
}

bool matches_graph_pattern(const Circuit& c, const Pattern& p) {
  return graph_form_signature(c) == graph_form_signature(pattern_to_circuit(p));
}

}  // namespace mbqc
