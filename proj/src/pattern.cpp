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

#include "mbqc/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "mbqc/gf2.hpp"

namespace mbqc {

namespace {

// Toggles membership of each element of add in deps; keeps deps sorted.
void xor_into(std::vector<unsigned>& deps, const std::vector<unsigned>& add) {
  for (unsigned v : add) {
    auto it = std::lower_bound(deps.begin(), deps.end(), v);
    if (it != deps.end() && *it == v) {
      deps.erase(it);
    } else {
      deps.insert(it, v);
    }
  }
}

Outcomes to_map(const std::vector<std::pair<unsigned, int>>& outcomes) {
  Outcomes m;
  for (const auto& [q, s] : outcomes) m[q] = s;
  return m;
}

}  // namespace

int BitExpr::eval(const Outcomes& outcomes) const {
  int v = base;
  for (unsigned q : deps) v ^= outcomes.at(q);
  return v & 1;
}

double AngleExpr::eval(const Outcomes& outcomes) const {
  int parity = 0;
  for (unsigned q : deps) parity ^= outcomes.at(q);
  return parity ? -base : base;
}

ResourceCount resources(const Pattern& p) {
  return ResourceCount{p.bbox_rows, p.bbox_cols, p.graph.n,
                       p.measured_count()};
}

PatternRun run_pattern(const Pattern& p, const StateVector& input,
                       OutcomePolicy& policy) {
  const unsigned n = p.graph.n;
  const auto wires = static_cast<unsigned>(p.inputs.size());
  if (input.num_qubits() != wires) {
    throw std::invalid_argument("input state size does not match wire count");
  }
  if (p.outputs.size() != wires) {
    throw std::invalid_argument("pattern output count does not match wires");
  }

  // Input wires carry the given state; every other vertex starts as |+>.
  const unsigned rest = n - wires;
  const double plus_amp = std::pow(0.5, rest / 2.0);
  std::vector<Complex> amps(size_t{1} << n);
  for (size_t idx = 0; idx < amps.size(); ++idx) {
    size_t a = 0;
    for (unsigned i = 0; i < wires; ++i) {
      a = (a << 1) | ((idx >> (n - 1 - p.inputs[i])) & 1);
    }
    amps[idx] = input.amplitude(a) * plus_amp;
  }
  StateVector state = StateVector::from_amplitudes(n, std::move(amps));
  for (const auto& [a, b] : p.graph.edges) state.apply_cz(a, b);

  PatternRun run{StateVector(1), {}};
  Outcomes seen;
  for (const MeasureStep& step : p.plan) {
    int s;
    if (step.basis == MeasBasis::X) {
      s = state.measure_x(step.qubit, policy);
    } else {
      s = state.measure_equatorial(step.qubit, step.angle.eval(seen), policy);
    }
    seen[step.qubit] = s;
    run.outcomes.emplace_back(step.qubit, s);
  }
  run.output = state.factor_keep(p.outputs);
  return run;
}

void apply_byproduct(StateVector& s, const ByproductRule& rule,
                     const Outcomes& outcomes) {
  for (unsigned o = 0; o < rule.x.size(); ++o) {
    if (rule.x[o].eval(outcomes)) s.apply_x(o);
  }
  for (unsigned o = 0; o < rule.z.size(); ++o) {
    if (rule.z[o].eval(outcomes)) s.apply_z(o);
  }
}

std::vector<StateVector> spanning_states(unsigned wires) {
  const Complex i{0, 1};
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<StateVector> out;
  if (wires == 1) {
    out.push_back(StateVector::from_amplitudes(1, {1, 0}));
    out.push_back(StateVector::from_amplitudes(1, {0, 1}));
    out.push_back(StateVector::from_amplitudes(1, {r, r}));
    out.push_back(StateVector::from_amplitudes(1, {r, r * i}));
  } else if (wires == 2) {
    out.push_back(StateVector::from_amplitudes(2, {1, 0, 0, 0}));
    out.push_back(StateVector::from_amplitudes(2, {0, 0, 0, 1}));
    out.push_back(StateVector::from_amplitudes(2, {0.5, 0.5, 0.5, 0.5}));
    out.push_back(
        StateVector::from_amplitudes(2, {0.5, 0.5 * i, 0.5 * i, -0.5}));
  } else {
    throw std::invalid_argument("spanning states cover 1 or 2 wires");
  }
  // One fixed full-support state; it alone pins a Pauli correction up to
  // phase, the basis states above make mismatches easy to read.
  std::mt19937_64 gen(0x6d62716370617474ull);
  std::vector<Complex> amps(size_t{1} << wires);
  double norm = 0;
  for (Complex& a : amps) {
    double re = static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
    double im = static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
    a = Complex{re, im};
    norm += std::norm(a);
  }
  for (Complex& a : amps) a /= std::sqrt(norm);
  out.push_back(StateVector::from_amplitudes(wires, std::move(amps)));
  return out;
}

namespace {

// Output states for every branch and every spanning input, plus the
// branch's outcome assignment. Throws if branch structure is input
// dependent or a planned measurement comes out deterministic.
struct BranchData {
  std::vector<int> bits;
  Outcomes outcomes;
  std::vector<StateVector> outputs;  // one per spanning input
};

std::vector<BranchData> collect_branches(const Pattern& p,
                                         const std::vector<StateVector>& ins) {
  std::vector<std::vector<int>> leaves = enumerate_branches(
      [&](OutcomePolicy& policy) { run_pattern(p, ins[0], policy); });
  std::vector<BranchData> branches;
  for (const auto& bits : leaves) {
    if (bits.size() != p.plan.size()) {
      throw std::logic_error("a planned measurement was not random");
    }
    BranchData data;
    data.bits = bits;
    for (const StateVector& in : ins) {
      OutcomePolicy policy = OutcomePolicy::force(bits);
      PatternRun run = run_pattern(p, in, policy);
      if (policy.consumed().size() != bits.size()) {
        throw std::logic_error("branch structure differs across inputs");
      }
      if (data.outcomes.empty()) data.outcomes = to_map(run.outcomes);
      data.outputs.push_back(std::move(run.output));
    }
    branches.push_back(std::move(data));
  }
  return branches;
}

}  // namespace

ByproductRule derive_byproduct_rule(const Pattern& p, const WireUnitary& u) {
  const auto wires = static_cast<unsigned>(p.outputs.size());
  const std::vector<StateVector> ins = spanning_states(wires);
  std::vector<StateVector> expected;
  for (const StateVector& in : ins) {
    StateVector e = in;
    u(e);
    expected.push_back(std::move(e));
  }

  std::vector<BranchData> branches = collect_branches(p, ins);
  const unsigned k = p.measured_count();

  // Exponent bits of the matching correction, one row per branch, columns
  // x_0..x_{w-1} z_0..z_{w-1}.
  std::vector<std::vector<uint8_t>> matches;
  for (const BranchData& branch : branches) {
    std::vector<std::vector<uint8_t>> survivors;
    for (unsigned cand = 0; cand < (1u << (2 * wires)); ++cand) {
      std::vector<uint8_t> exps(2 * wires);
      for (unsigned j = 0; j < 2 * wires; ++j) exps[j] = (cand >> j) & 1;
      bool ok = true;
      for (unsigned i = 0; i < ins.size() && ok; ++i) {
        StateVector corrected = branch.outputs[i];
        for (unsigned o = 0; o < wires; ++o) {
          if (exps[o]) corrected.apply_x(o);
          if (exps[wires + o]) corrected.apply_z(o);
        }
        ok = corrected.approx_equal(expected[i]);
      }
      if (ok) survivors.push_back(std::move(exps));
    }
    if (survivors.empty()) {
      throw std::logic_error("no Pauli correction matches a branch");
    }
    if (survivors.size() > 1) {
      throw std::logic_error("Pauli correction for a branch is ambiguous");
    }
    matches.push_back(std::move(survivors[0]));
  }

  // Affine fit over GF(2): exponent = c + sum coef_q s_q for each exponent
  // column, using every branch as an equation.
  gf2::Matrix a(static_cast<unsigned>(branches.size()), 1 + k);
  for (unsigned r = 0; r < branches.size(); ++r) {
    a.at(r, 0) = 1;
    for (unsigned j = 0; j < k; ++j) {
      a.at(r, 1 + j) = static_cast<uint8_t>(branches[r].bits[j]);
    }
  }
  ByproductRule rule;
  for (unsigned col = 0; col < 2 * wires; ++col) {
    std::vector<uint8_t> b(branches.size());
    for (unsigned r = 0; r < branches.size(); ++r) b[r] = matches[r][col];
    auto x = gf2::solve(a, b);
    if (!x) {
      throw std::logic_error("byproduct is not affine in the outcomes");
    }
    BitExpr expr;
    expr.base = (*x)[0];
    for (unsigned j = 0; j < k; ++j) {
      if ((*x)[1 + j]) expr.deps.push_back(p.plan[j].qubit);
    }
    std::sort(expr.deps.begin(), expr.deps.end());
    (col < wires ? rule.x : rule.z).push_back(std::move(expr));
  }
  return rule;
}

ValidationReport validate_pattern(const Pattern& p, const WireUnitary& u,
                                  double tol) {
  if (p.byproduct.empty()) {
    throw std::invalid_argument("pattern carries no byproduct rule");
  }
  const auto wires = static_cast<unsigned>(p.outputs.size());
  const std::vector<StateVector> ins = spanning_states(wires);
  std::vector<StateVector> expected;
  for (const StateVector& in : ins) {
    StateVector e = in;
    u(e);
    expected.push_back(std::move(e));
  }

  std::vector<BranchData> branches = collect_branches(p, ins);
  ValidationReport report;
  report.branches = static_cast<unsigned>(branches.size());
  for (const BranchData& branch : branches) {
    for (unsigned i = 0; i < ins.size(); ++i) {
      StateVector corrected = branch.outputs[i];
      apply_byproduct(corrected, p.byproduct, branch.outcomes);
      double deficit = 1.0 - corrected.fidelity(expected[i]);
      report.worst_fidelity_deficit =
          std::max(report.worst_fidelity_deficit, deficit);
    }
  }
  if (report.worst_fidelity_deficit > tol) {
    throw std::logic_error("pattern does not realize the claimed map");
  }
  return report;
}

namespace {

// Chain walk that pushes an incoming byproduct (x, z) through b's measured
// segment for one wire, compensating equatorial angles along the way.
// Operates on the composed pattern, whose ids are already merged.
struct ChainCursor {
  BitExpr x, z;
};

}  // namespace

Pattern compose_patterns(const Pattern& a, const Pattern& b) {
  const auto wires = static_cast<unsigned>(a.outputs.size());
  if (b.inputs.size() != wires) {
    throw std::invalid_argument("wire counts do not match");
  }
  if (a.byproduct.empty() && a.measured_count() > 0) {
    throw std::invalid_argument("left pattern carries no byproduct rule");
  }

  // b's qubit q maps to a's output for input wires and to a fresh id
  // otherwise.
  std::vector<unsigned> map_b(b.graph.n, 0);
  std::vector<bool> is_input(b.graph.n, false);
  for (unsigned i = 0; i < wires; ++i) {
    map_b[b.inputs[i]] = a.outputs[i];
    is_input[b.inputs[i]] = true;
  }
  unsigned next = a.graph.n;
  for (unsigned q = 0; q < b.graph.n; ++q) {
    if (!is_input[q]) map_b[q] = next++;
  }

  Pattern out;
  std::vector<std::pair<unsigned, unsigned>> edges = a.graph.edges;
  for (const auto& [u, v] : b.graph.edges) {
    edges.emplace_back(map_b[u], map_b[v]);
  }
  out.graph = Graph::from_edges(next, std::move(edges));
  out.inputs = a.inputs;
  for (unsigned o : b.outputs) out.outputs.push_back(map_b[o]);
  out.bbox_rows = std::max(a.bbox_rows, b.bbox_rows);
  out.bbox_cols = a.bbox_cols + b.bbox_cols - 1;

  out.plan = a.plan;
  std::vector<MeasureStep> b_steps;
  for (const MeasureStep& step : b.plan) {
    MeasureStep s = step;
    s.qubit = map_b[step.qubit];
    for (unsigned& d : s.angle.deps) d = map_b[d];
    b_steps.push_back(std::move(s));
  }

  const bool b_all_x = std::all_of(
      b.plan.begin(), b.plan.end(),
      [](const MeasureStep& s) { return s.basis == MeasBasis::X; });

  // b's own rule, relabeled into composed ids.
  ByproductRule rule;
  for (unsigned o = 0; o < wires; ++o) {
    BitExpr bx = b.byproduct.x[o];
    BitExpr bz = b.byproduct.z[o];
    for (unsigned& d : bx.deps) d = map_b[d];
    for (unsigned& d : bz.deps) d = map_b[d];
    std::sort(bx.deps.begin(), bx.deps.end());
    std::sort(bz.deps.begin(), bz.deps.end());
    rule.x.push_back(std::move(bx));
    rule.z.push_back(std::move(bz));
  }

  if (a.measured_count() > 0) {
    if (b_all_x && b.wire_clifford) {
      // Push each incoming generator through b's Clifford action and add
      // its exponent expression wherever the image lands.
      for (unsigned i = 0; i < wires; ++i) {
        for (bool want_x : {true, false}) {
          const BitExpr& e =
              want_x ? a.byproduct.x[i] : a.byproduct.z[i];
          if (e.base == 0 && e.deps.empty()) continue;
          PauliString gen(wires, i, want_x ? Pauli::X : Pauli::Z);
          PauliString img = conjugate_by_circuit(gen, *b.wire_clifford);
          for (unsigned j = 0; j < wires; ++j) {
            Pauli l = img.letter(j);
            if (l == Pauli::X || l == Pauli::Y) {
              rule.x[j].base ^= e.base;
              xor_into(rule.x[j].deps, e.deps);
            }
            if (l == Pauli::Z || l == Pauli::Y) {
              rule.z[j].base ^= e.base;
              xor_into(rule.z[j].deps, e.deps);
            }
          }
        }
      }
    } else {
      // Chain propagation: measuring at a qubit with incoming (x, z)
      // flips the angle with x and hands (s xor z, x) to the next vertex;
      // the s term is already part of b's own rule. The walk must stay in
      // b's region and never fall back into a.
      auto adj = out.graph.adjacency();
      std::vector<bool> in_b(out.graph.n, false);
      for (unsigned q = 0; q < b.graph.n; ++q) in_b[map_b[q]] = true;
      for (unsigned i = 0; i < wires; ++i) {
        ChainCursor cur{a.byproduct.x[i], a.byproduct.z[i]};
        unsigned prev = out.graph.n;  // sentinel
        unsigned c = a.outputs[i];
        for (;;) {
          auto it = std::find_if(
              b_steps.begin(), b_steps.end(),
              [c](const MeasureStep& s) { return s.qubit == c; });
          if (it == b_steps.end()) break;  // reached the unmeasured output
          if (it->basis == MeasBasis::Equatorial) {
            if (cur.x.base) it->angle.base = -it->angle.base;
            xor_into(it->angle.deps, cur.x.deps);
          }
          ChainCursor nextcur;
          nextcur.x = cur.z;
          nextcur.z = cur.x;
          cur = std::move(nextcur);
          unsigned following = out.graph.n;
          for (unsigned nb : adj[c]) {
            if (nb == prev || !in_b[nb]) continue;
            if (following != out.graph.n) {
              throw std::invalid_argument(
                  "composition needs chain-shaped measured wires");
            }
            following = nb;
          }
          if (following == out.graph.n) {
            throw std::invalid_argument("measured wire ends before output");
          }
          prev = c;
          c = following;
        }
        if (c != map_b[b.outputs[i]]) {
          throw std::invalid_argument(
              "measured wire does not reach its output");
        }
        rule.x[i].base ^= cur.x.base;
        xor_into(rule.x[i].deps, cur.x.deps);
        rule.z[i].base ^= cur.z.base;
        xor_into(rule.z[i].deps, cur.z.deps);
      }
    }
  }

  for (MeasureStep& s : b_steps) out.plan.push_back(std::move(s));
  out.byproduct = std::move(rule);
  if (a.wire_clifford && b.wire_clifford) {
    std::vector<CliffordGate> gates = *a.wire_clifford;
    gates.insert(gates.end(), b.wire_clifford->begin(),
                 b.wire_clifford->end());
    out.wire_clifford = std::move(gates);
  }
  return out;
}

Pattern eliminate_redundant_wires(const Pattern& p) {
  Pattern cur = p;
  for (;;) {
    auto adj = cur.graph.adjacency();
    std::vector<bool> terminal(cur.graph.n, false);
    for (unsigned q : cur.inputs) terminal[q] = true;
    for (unsigned q : cur.outputs) terminal[q] = true;
    auto x_step = [&cur](unsigned q) {
      return std::any_of(cur.plan.begin(), cur.plan.end(),
                         [q](const MeasureStep& s) {
                           return s.qubit == q && s.basis == MeasBasis::X;
                         });
    };

    unsigned u = cur.graph.n, v = cur.graph.n;
    for (const auto& [e1, e2] : cur.graph.edges) {
      if (terminal[e1] || terminal[e2]) continue;
      if (adj[e1].size() != 2 || adj[e2].size() != 2) continue;
      if (!x_step(e1) || !x_step(e2)) continue;
      unsigned p1 = adj[e1][0] == e2 ? adj[e1][1] : adj[e1][0];
      unsigned n2 = adj[e2][0] == e1 ? adj[e2][1] : adj[e2][0];
      if (p1 == n2) continue;  // would collapse a cycle
      u = e1;
      v = e2;
      break;
    }
    if (u == cur.graph.n) return cur;

    unsigned p1 = adj[u][0] == v ? adj[u][1] : adj[u][0];
    unsigned n2 = adj[v][0] == u ? adj[v][1] : adj[v][0];

    // An identity wire segment: every branch realizes the same channel, so
    // the segment and any dependence on its outcomes can be dropped with
    // the outcomes pinned to 0.
    std::vector<unsigned> dead = {u, v};
    std::sort(dead.begin(), dead.end());
    std::vector<unsigned> relabel(cur.graph.n);
    unsigned w = 0;
    for (unsigned q = 0; q < cur.graph.n; ++q) {
      relabel[q] = w;
      if (q != dead[0] && q != dead[1]) ++w;
    }
    auto strip = [&](std::vector<unsigned>& deps) {
      std::vector<unsigned> out;
      for (unsigned d : deps) {
        if (d != u && d != v) out.push_back(relabel[d]);
      }
      deps = std::move(out);
    };

    Pattern nextp;
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (const auto& [e1, e2] : cur.graph.edges) {
      if (e1 == u || e1 == v || e2 == u || e2 == v) continue;
      edges.emplace_back(relabel[e1], relabel[e2]);
    }
    edges.emplace_back(relabel[p1], relabel[n2]);
    nextp.graph = Graph::from_edges(cur.graph.n - 2, std::move(edges));
    for (unsigned q : cur.inputs) nextp.inputs.push_back(relabel[q]);
    for (unsigned q : cur.outputs) nextp.outputs.push_back(relabel[q]);
    for (const MeasureStep& s : cur.plan) {
      if (s.qubit == u || s.qubit == v) continue;
      MeasureStep ns = s;
      ns.qubit = relabel[s.qubit];
      strip(ns.angle.deps);
      nextp.plan.push_back(std::move(ns));
    }
    nextp.byproduct = cur.byproduct;
    for (BitExpr& e : nextp.byproduct.x) strip(e.deps);
    for (BitExpr& e : nextp.byproduct.z) strip(e.deps);
    nextp.wire_clifford = cur.wire_clifford;
    nextp.bbox_rows = cur.bbox_rows;
    nextp.bbox_cols = cur.bbox_cols >= 2 ? cur.bbox_cols - 2 : 1;
    cur = std::move(nextp);
  }
}

namespace {

Pattern finish(Pattern p, const WireUnitary& u) {
  p.byproduct = derive_byproduct_rule(p, u);
  return p;
}

}  // namespace

Pattern pattern_wire() {
  static const Pattern cached = [] {
    Pattern p;
    p.graph = Graph::path(3);
    p.inputs = {0};
    p.outputs = {2};
    p.plan = {{0, MeasBasis::X, {}}, {1, MeasBasis::X, {}}};
    p.wire_clifford = std::vector<CliffordGate>{};
    p.bbox_rows = 1;
    p.bbox_cols = 3;
    return finish(std::move(p), unitary_identity(1));
  }();
  return cached;
}

Pattern pattern_xrot(double phi) {
  Pattern p;
  p.graph = Graph::path(3);
  p.inputs = {0};
  p.outputs = {2};
  p.plan = {{0, MeasBasis::X, {}},
            {1, MeasBasis::Equatorial, {-phi, {0}}}};
  p.bbox_rows = 1;
  p.bbox_cols = 3;
  return finish(std::move(p), unitary_xrot(phi));
}

Pattern pattern_zrot(double theta) {
  Pattern p;
  p.graph = Graph::path(3);
  p.inputs = {0};
  p.outputs = {2};
  p.plan = {{0, MeasBasis::Equatorial, {-theta, {}}},
            {1, MeasBasis::X, {}}};
  p.bbox_rows = 1;
  p.bbox_cols = 3;
  return finish(std::move(p), unitary_zrot(theta));
}

Pattern pattern_euler(double psi, double theta, double phi) {
  Pattern p;
  p.graph = Graph::path(5);
  p.inputs = {0};
  p.outputs = {4};
  p.plan = {{0, MeasBasis::Equatorial, {-phi, {}}},
            {1, MeasBasis::Equatorial, {-theta, {0}}},
            {2, MeasBasis::Equatorial, {-psi, {1}}},
            {3, MeasBasis::X, {}}};
  p.bbox_rows = 1;
  p.bbox_cols = 5;
  return finish(std::move(p), unitary_euler(psi, theta, phi));
}

Pattern pattern_cnot6() {
  static const Pattern cached = [] {
    Pattern p;
    p.graph = Graph::from_edges(6, {{0, 2}, {2, 4}, {1, 3}, {3, 5}, {3, 4}});
    p.inputs = {0, 1};
    p.outputs = {4, 5};
    p.plan = {{0, MeasBasis::X, {}},
              {1, MeasBasis::X, {}},
              {2, MeasBasis::X, {}},
              {3, MeasBasis::X, {}}};
    p.wire_clifford = std::vector<CliffordGate>{{CliffordKind::CNOT, 0, 1}};
    p.bbox_rows = 2;
    p.bbox_cols = 3;
    return finish(std::move(p), unitary_cnot());
  }();
  return cached;
}

Pattern pattern_cnot_square() {
  static const Pattern cached = [] {
    Pattern p;
    p.graph = Graph::from_edges(10, {{0, 1},
                                     {1, 2},
                                     {2, 3},
                                     {3, 4},
                                     {2, 5},
                                     {5, 6},
                                     {6, 8},
                                     {7, 8},
                                     {8, 9}});
    p.inputs = {0, 7};
    p.outputs = {4, 9};
    p.plan = {{0, MeasBasis::X, {}}, {1, MeasBasis::X, {}},
              {2, MeasBasis::X, {}}, {3, MeasBasis::X, {}},
              {5, MeasBasis::X, {}}, {6, MeasBasis::X, {}},
              {7, MeasBasis::X, {}}, {8, MeasBasis::X, {}}};
    p.wire_clifford = std::vector<CliffordGate>{{CliffordKind::CNOT, 0, 1}};
    p.bbox_rows = 5;
    p.bbox_cols = 3;
    return finish(std::move(p), unitary_cnot());
  }();
  return cached;
}

Pattern pattern_remote_cz() {
  static const Pattern cached = [] {
    Pattern p;
    p.graph = Graph::path(4);
    p.inputs = {0, 3};
    p.outputs = {0, 3};
    p.plan = {{1, MeasBasis::X, {}}, {2, MeasBasis::X, {}}};
    p.wire_clifford = std::vector<CliffordGate>{{CliffordKind::CZ, 0, 1}};
    p.bbox_rows = 4;
    p.bbox_cols = 1;
    return finish(std::move(p), unitary_cz());
  }();
  return cached;
}

WireUnitary unitary_identity(unsigned) {
  return [](StateVector&) {};
}

WireUnitary unitary_xrot(double phi) {
  return [phi](StateVector& s) { s.apply_ux(0, phi); };
}

WireUnitary unitary_zrot(double theta) {
  return [theta](StateVector& s) { s.apply_uz(0, theta); };
}

WireUnitary unitary_euler(double psi, double theta, double phi) {
  return [=](StateVector& s) {
    s.apply_uz(0, phi);
    s.apply_ux(0, theta);
    s.apply_uz(0, psi);
  };
}

WireUnitary unitary_cnot() {
  return [](StateVector& s) { s.apply_cnot(0, 1); };
}

WireUnitary unitary_cz() {
  return [](StateVector& s) { s.apply_cz(0, 1); };
}

std::string Pattern::to_json() const {
  nlohmann::ordered_json j;
  j["qubits"] = graph.n;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : graph.edges) j["edges"].push_back({a, b});
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["plan"] = nlohmann::json::array();
  for (const MeasureStep& s : plan) {
    nlohmann::ordered_json step;
    step["qubit"] = s.qubit;
    step["basis"] = s.basis == MeasBasis::X ? "X" : "equatorial";
    if (s.basis == MeasBasis::Equatorial) {
      step["angle"] = {{"base", s.angle.base}, {"deps", s.angle.deps}};
    }
    j["plan"].push_back(std::move(step));
  }
  auto exprs = [](const std::vector<BitExpr>& v) {
    nlohmann::ordered_json arr = nlohmann::json::array();
    for (const BitExpr& e : v) {
      arr.push_back({{"const", e.base}, {"deps", e.deps}});
    }
    return arr;
  };
  j["byproduct"] = {{"x", exprs(byproduct.x)}, {"z", exprs(byproduct.z)}};
  return j.dump(2);
}

Pattern Pattern::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Pattern p;
  unsigned n = j.at("qubits").get<unsigned>();
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<unsigned>(), e.at(1).get<unsigned>());
  }
  p.graph = Graph::from_edges(n, std::move(edges));
  p.inputs = j.at("inputs").get<std::vector<unsigned>>();
  p.outputs = j.at("outputs").get<std::vector<unsigned>>();
  for (const auto& s : j.at("plan")) {
    MeasureStep step;
    step.qubit = s.at("qubit").get<unsigned>();
    std::string basis = s.at("basis").get<std::string>();
    if (basis == "X") {
      step.basis = MeasBasis::X;
    } else if (basis == "equatorial") {
      step.basis = MeasBasis::Equatorial;
      step.angle.base = s.at("angle").at("base").get<double>();
      step.angle.deps =
          s.at("angle").at("deps").get<std::vector<unsigned>>();
    } else {
      throw std::invalid_argument("unknown basis " + basis);
    }
    p.plan.push_back(std::move(step));
  }
  if (j.contains("byproduct")) {
    auto parse_exprs = [](const nlohmann::json& arr) {
      std::vector<BitExpr> out;
      for (const auto& e : arr) {
        BitExpr expr;
        expr.base = e.at("const").get<int>();
        expr.deps = e.at("deps").get<std::vector<unsigned>>();
        out.push_back(std::move(expr));
      }
      return out;
    };
    p.byproduct.x = parse_exprs(j.at("byproduct").at("x"));
    p.byproduct.z = parse_exprs(j.at("byproduct").at("z"));
  }
  p.bbox_rows = 1;
  p.bbox_cols = p.graph.n;
  return p;
}

}  // namespace mbqc
