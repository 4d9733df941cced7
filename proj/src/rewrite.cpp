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

#include "mbqc/rewrite.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace mbqc {

namespace {

using Ops = std::vector<CircuitOp>;

[[noreturn]] void mismatch(const std::string& what) {
  throw std::invalid_argument(what);
}

const CircuitOp& at(const Ops& ops, std::size_t i, const char* rule) {
  if (i >= ops.size()) {
    mismatch(std::string(rule) + ": window runs past the end of the op list");
  }
  return ops[i];
}

const CliffordGate* as_gate(const CircuitOp& op, CliffordKind kind) {
  const auto* g = std::get_if<GateOp>(&op);
  return (g && g->gate.kind == kind) ? &g->gate : nullptr;
}

bool touches(const CircuitOp& op, unsigned q) {
  for (unsigned s : op_support(op)) {
    if (s == q) return true;
  }
  return false;
}

AngleExpr negated(AngleExpr a) {
  a.base = -a.base;
  return a;
}

char other_axis(char axis) { return axis == 'x' ? 'z' : 'x'; }

std::string hash_hex(uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json circuit_json(const Circuit& c) {
  nlohmann::ordered_json j;
  j["num_qubits"] = c.num_qubits;
  j["inputs"] = c.inputs;
  j["outputs"] = c.outputs;
  j["ops"] = nlohmann::json::array();
  for (const CircuitOp& op : c.ops) j["ops"].push_back(op_text(op));
  j["hash"] = hash_hex(c.hash());
  return j;
}

}  // namespace

const char* rule_name(RewriteRule rule) {
  switch (rule) {
    case RewriteRule::InsertHH: return "insert_hh";
    case RewriteRule::CancelHH: return "cancel_hh";
    case RewriteRule::CzCnotIdentity: return "cz_cnot_identity";
    case RewriteRule::BellTranspose: return "bell_transpose";
    case RewriteRule::CommuteCnotCz: return "commute_cnot_cz";
    case RewriteRule::CommuteDisjoint: return "commute_disjoint";
    case RewriteRule::CommuteHRot: return "commute_h_rot";
    case RewriteRule::CommuteUzCz: return "commute_uz_cz";
    case RewriteRule::CnotOnPlusPlus: return "cnot_on_plus_plus";
    case RewriteRule::EquatorialToUzX: return "equatorial_to_uz_x";
    case RewriteRule::BoxBellPrep: return "box_bell_prep";
    case RewriteRule::BoxBellMeas: return "box_bell_meas";
    case RewriteRule::BoxGeneralizedBell: return "box_generalized_bell";
  }
  throw std::logic_error("unknown rewrite rule");
}

RewriteRule rule_from_name(const std::string& name) {
  static constexpr RewriteRule kAll[] = {
      RewriteRule::InsertHH,        RewriteRule::CancelHH,
      RewriteRule::CzCnotIdentity,  RewriteRule::BellTranspose,
      RewriteRule::CommuteCnotCz,   RewriteRule::CommuteDisjoint,
      RewriteRule::CommuteHRot,     RewriteRule::CommuteUzCz,
      RewriteRule::CnotOnPlusPlus,  RewriteRule::EquatorialToUzX,
      RewriteRule::BoxBellPrep,     RewriteRule::BoxBellMeas,
      RewriteRule::BoxGeneralizedBell,
  };
  for (RewriteRule r : kAll) {
    if (name == rule_name(r)) return r;
  }
  throw std::invalid_argument("unknown rewrite rule: " + name);
}

Applied apply_rule(const Circuit& c, const RuleApplication& app) {
  Circuit out = c;
  Ops& ops = out.ops;
  const std::size_t site = app.site;
  RuleApplication inv{app.rule, site, std::nullopt, std::nullopt};

  switch (app.rule) {
    case RewriteRule::InsertHH: {
      if (!app.qubit) mismatch("insert_hh: rule needs a qubit");
      const unsigned q = *app.qubit;
      if (site > ops.size()) mismatch("insert_hh: site out of range");
      const std::size_t second = app.site2.value_or(site + 1);
      if (second <= site || second > ops.size() + 1) {
        mismatch("insert_hh: second site out of range");
      }
      // Everything that ends up between the pair must leave the qubit
      // alone, otherwise the insertion would not be an identity.
      for (std::size_t i = site; i + 2 <= second; ++i) {
        if (touches(ops[i], q)) {
          mismatch("insert_hh: an op between the pair acts on the qubit");
        }
      }
      ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(site),
                 GateOp{{CliffordKind::H, q}});
      ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(second),
                 GateOp{{CliffordKind::H, q}});
      inv = {RewriteRule::CancelHH, site, std::nullopt, std::nullopt};
      break;
    }

    case RewriteRule::CancelHH: {
      const CliffordGate* g = as_gate(at(ops, site, "cancel_hh"),
                                      CliffordKind::H);
      if (!g) mismatch("cancel_hh: no h at site");
      const unsigned q = g->q0;
      std::size_t j = site + 1;
      for (; j < ops.size(); ++j) {
        if (const CliffordGate* g2 = as_gate(ops[j], CliffordKind::H);
            g2 && g2->q0 == q) {
          break;
        }
        if (touches(ops[j], q)) {
          mismatch("cancel_hh: an op acts on the qubit before the partner h");
        }
      }
      if (j >= ops.size()) mismatch("cancel_hh: no partner h downstream");
      ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(j));
      ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(site));
      inv = {RewriteRule::InsertHH, site, q, j};
      break;
    }

    case RewriteRule::CzCnotIdentity: {
      if (const CliffordGate* cz = as_gate(at(ops, site, "cz_cnot_identity"),
                                           CliffordKind::CZ)) {
        const unsigned a = cz->q0;
        const unsigned b = cz->q1;
        ops[site] = GateOp{{CliffordKind::H, b}};
        ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1,
                   {GateOp{{CliffordKind::CNOT, a, b}},
                    GateOp{{CliffordKind::H, b}}});
      } else {
        const CliffordGate* h1 = as_gate(ops[site], CliffordKind::H);
        if (!h1) mismatch("cz_cnot_identity: site is neither cz nor h");
        const CliffordGate* cn =
            as_gate(at(ops, site + 1, "cz_cnot_identity"), CliffordKind::CNOT);
        const CliffordGate* h2 =
            as_gate(at(ops, site + 2, "cz_cnot_identity"), CliffordKind::H);
        if (!cn || !h2 || h1->q0 != cn->q1 || h2->q0 != cn->q1) {
          mismatch("cz_cnot_identity: window is not h t; cnot c t; h t");
        }
        ops[site] = GateOp{{CliffordKind::CZ, cn->q0, cn->q1}};
        ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1,
                  ops.begin() + static_cast<std::ptrdiff_t>(site) + 3);
      }
      break;
    }

    case RewriteRule::BellTranspose: {
      const auto* bp = std::get_if<BellPrepOp>(&at(ops, site,
                                                   "bell_transpose"));
      if (!bp) mismatch("bell_transpose: site is not a Bell preparation");
      at(ops, site + 1, "bell_transpose");
      CircuitOp& g = ops[site + 1];
      const auto hop = [bp](unsigned q) {
        if (q == bp->q1) return bp->q2;
        if (q == bp->q2) return bp->q1;
        mismatch("bell_transpose: op does not act on a half of the pair");
      };
      if (auto* rot = std::get_if<RotOp>(&g)) {
        rot->qubit = hop(rot->qubit);
      } else if (const CliffordGate* h = as_gate(g, CliffordKind::H)) {
        g = GateOp{{CliffordKind::H, hop(h->q0)}};
      } else {
        mismatch("bell_transpose: only rotations and h may hop the pair");
      }
      break;
    }

    case RewriteRule::CommuteCnotCz: {
      const CircuitOp& first = at(ops, site, "commute_cnot_cz");
      const CircuitOp& second = at(ops, site + 1, "commute_cnot_cz");
      if (const CliffordGate* cz = as_gate(first, CliffordKind::CZ)) {
        const CliffordGate* cn = as_gate(second, CliffordKind::CNOT);
        if (!cn) mismatch("commute_cnot_cz: cz is not followed by a cnot");
        const unsigned cq = cn->q0;
        const unsigned t = cn->q1;
        const bool has_t = cz->q0 == t || cz->q1 == t;
        const bool has_c = cz->q0 == cq || cz->q1 == cq;
        if (has_t && !has_c) {
          // Pulling the cnot left past a cz on its target leaves a cz
          // between the spectator endpoint and the control behind.
          const unsigned o = cz->q0 == t ? cz->q1 : cz->q0;
          const CircuitOp kept = first;
          ops[site] = second;
          ops[site + 1] = kept;
          ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(site) + 2,
                     GateOp{{CliffordKind::CZ, o, cq}});
        } else if (has_c && !has_t) {
          std::swap(ops[site], ops[site + 1]);
        } else {
          mismatch("commute_cnot_cz: cz must share exactly one endpoint");
        }
      } else if (const CliffordGate* cn = as_gate(first, CliffordKind::CNOT)) {
        const CliffordGate* cz1 = as_gate(second, CliffordKind::CZ);
        if (!cz1) mismatch("commute_cnot_cz: cnot is not followed by a cz");
        const unsigned cq = cn->q0;
        const unsigned t = cn->q1;
        const bool has_t = cz1->q0 == t || cz1->q1 == t;
        const bool has_c = cz1->q0 == cq || cz1->q1 == cq;
        if (has_c && !has_t) {
          std::swap(ops[site], ops[site + 1]);
        } else if (has_t && !has_c) {
          // Absorb the bridging cz emitted by the forward direction. The
          // third op must be exactly cz o c so the round trip is
          // byte-identical.
          const unsigned o = cz1->q0 == t ? cz1->q1 : cz1->q0;
          const CliffordGate* cz2 =
              as_gate(at(ops, site + 2, "commute_cnot_cz"), CliffordKind::CZ);
          if (!cz2 || cz2->q0 != o || cz2->q1 != cq) {
            mismatch("commute_cnot_cz: no bridging cz to absorb");
          }
          ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(site) + 2);
          std::swap(ops[site], ops[site + 1]);
        } else {
          mismatch("commute_cnot_cz: cz must share exactly one endpoint");
        }
      } else {
        mismatch("commute_cnot_cz: no cz/cnot window at site");
      }
      break;
    }

    case RewriteRule::CommuteDisjoint: {
      at(ops, site + 1, "commute_disjoint");
      if (!ops_disjoint(ops[site], ops[site + 1])) {
        mismatch("commute_disjoint: ops share a qubit");
      }
      std::swap(ops[site], ops[site + 1]);
      break;
    }

    case RewriteRule::CommuteHRot: {
      const CircuitOp& first = at(ops, site, "commute_h_rot");
      const CircuitOp& second = at(ops, site + 1, "commute_h_rot");
      if (const CliffordGate* h = as_gate(first, CliffordKind::H)) {
        const auto* rot = std::get_if<RotOp>(&second);
        if (!rot || rot->qubit != h->q0) {
          mismatch("commute_h_rot: h is not followed by a rotation on its"
                   " qubit");
        }
        const RotOp moved{other_axis(rot->axis), rot->qubit, rot->angle};
        ops[site] = moved;
        ops[site + 1] = GateOp{{CliffordKind::H, moved.qubit}};
      } else if (const auto* rot = std::get_if<RotOp>(&first)) {
        const CliffordGate* h = as_gate(second, CliffordKind::H);
        if (!h || h->q0 != rot->qubit) {
          mismatch("commute_h_rot: rotation is not followed by h on its"
                   " qubit");
        }
        const RotOp moved{other_axis(rot->axis), rot->qubit, rot->angle};
        ops[site] = GateOp{{CliffordKind::H, moved.qubit}};
        ops[site + 1] = moved;
      } else {
        mismatch("commute_h_rot: no h/rotation window at site");
      }
      break;
    }

    case RewriteRule::CommuteUzCz: {
      const CircuitOp& first = at(ops, site, "commute_uz_cz");
      const CircuitOp& second = at(ops, site + 1, "commute_uz_cz");
      const CliffordGate* cz = as_gate(first, CliffordKind::CZ);
      const RotOp* rot = std::get_if<RotOp>(&second);
      if (!cz || !rot) {
        rot = std::get_if<RotOp>(&first);
        cz = as_gate(second, CliffordKind::CZ);
      }
      if (!cz || !rot || rot->axis != 'z' ||
          (rot->qubit != cz->q0 && rot->qubit != cz->q1)) {
        mismatch("commute_uz_cz: window is not a cz next to a z rotation on"
                 " one of its endpoints");
      }
      std::swap(ops[site], ops[site + 1]);
      break;
    }

    case RewriteRule::CnotOnPlusPlus: {
      const auto* prep = std::get_if<PrepOp>(&at(ops, site,
                                                 "cnot_on_plus_plus"));
      if (!prep || prep->basis != '+') {
        mismatch("cnot_on_plus_plus: site is not a |+> preparation");
      }
      const unsigned t = prep->qubit;
      if (app.qubit) {
        const unsigned control = *app.qubit;
        if (control == t) {
          mismatch("cnot_on_plus_plus: control equals the target");
        }
        ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1,
                   GateOp{{CliffordKind::CNOT, control, t}});
        inv = {RewriteRule::CnotOnPlusPlus, site, std::nullopt, std::nullopt};
      } else {
        const CliffordGate* cn = as_gate(at(ops, site + 1,
                                            "cnot_on_plus_plus"),
                                         CliffordKind::CNOT);
        if (!cn || cn->q1 != t) {
          mismatch("cnot_on_plus_plus: no cnot targeting the fresh |+>");
        }
        inv = {RewriteRule::CnotOnPlusPlus, site, cn->q0, std::nullopt};
        ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1);
      }
      break;
    }

    case RewriteRule::EquatorialToUzX: {
      const CircuitOp& first = at(ops, site, "equatorial_to_uz_x");
      if (const auto* me = std::get_if<MeasureOp>(&first);
          me && me->basis == 'E') {
        MeasureOp mx;
        mx.basis = 'X';
        mx.qubit = me->qubit;
        mx.bit = me->bit;
        const RotOp rot{'z', me->qubit, negated(me->angle)};
        ops[site] = rot;
        ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1, mx);
      } else if (const auto* rot = std::get_if<RotOp>(&first);
                 rot && rot->axis == 'z') {
        const auto* mx = std::get_if<MeasureOp>(&at(ops, site + 1,
                                                    "equatorial_to_uz_x"));
        if (!mx || mx->basis != 'X' || mx->qubit != rot->qubit) {
          mismatch("equatorial_to_uz_x: z rotation is not followed by mx on"
                   " its qubit");
        }
        MeasureOp me;
        me.basis = 'E';
        me.qubit = rot->qubit;
        me.angle = negated(rot->angle);
        me.bit = mx->bit;
        ops[site] = me;
        ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1);
      } else {
        mismatch("equatorial_to_uz_x: no equatorial measurement or uz; mx"
                 " window at site");
      }
      break;
    }

    case RewriteRule::BoxBellPrep: {
      const CircuitOp& first = at(ops, site, "box_bell_prep");
      if (const auto* bp = std::get_if<BellPrepOp>(&first)) {
        const unsigned a = bp->q1;
        const unsigned b = bp->q2;
        ops[site] = PrepOp{a, '+'};
        ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1,
                   {CircuitOp{PrepOp{b, '+'}},
                    CircuitOp{GateOp{{CliffordKind::CZ, a, b}}},
                    CircuitOp{GateOp{{CliffordKind::H, a}}}});
      } else {
        const auto* p1 = std::get_if<PrepOp>(&first);
        const auto* p2 =
            std::get_if<PrepOp>(&at(ops, site + 1, "box_bell_prep"));
        const CliffordGate* cz =
            as_gate(at(ops, site + 2, "box_bell_prep"), CliffordKind::CZ);
        const CliffordGate* h =
            as_gate(at(ops, site + 3, "box_bell_prep"), CliffordKind::H);
        if (!p1 || p1->basis != '+' || !p2 || p2->basis != '+' || !cz || !h ||
            cz->q0 != p1->qubit || cz->q1 != p2->qubit ||
            h->q0 != p1->qubit) {
          mismatch("box_bell_prep: window is not prep+ a; prep+ b; cz a b;"
                   " h a");
        }
        ops[site] = BellPrepOp{p1->qubit, p2->qubit};
        ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1,
                  ops.begin() + static_cast<std::ptrdiff_t>(site) + 4);
      }
      break;
    }

    case RewriteRule::BoxBellMeas: {
      const CircuitOp& first = at(ops, site, "box_bell_meas");
      if (const auto* bm = std::get_if<BellMeasureOp>(&first)) {
        MeasureOp m1;
        m1.basis = 'X';
        m1.qubit = bm->q1;
        m1.bit = bm->bit1;
        MeasureOp m2;
        m2.basis = 'X';
        m2.qubit = bm->q2;
        m2.bit = bm->bit2;
        const unsigned a = bm->q1;
        const unsigned b = bm->q2;
        ops[site] = GateOp{{CliffordKind::H, b}};
        ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1,
                   {CircuitOp{GateOp{{CliffordKind::CZ, a, b}}},
                    CircuitOp{m1}, CircuitOp{m2}});
      } else {
        const CliffordGate* h = as_gate(first, CliffordKind::H);
        if (!h) mismatch("box_bell_meas: site is neither a Bell measurement"
                         " nor h");
        const unsigned b = h->q0;
        const CliffordGate* cz =
            as_gate(at(ops, site + 1, "box_bell_meas"), CliffordKind::CZ);
        const auto* m1 =
            std::get_if<MeasureOp>(&at(ops, site + 2, "box_bell_meas"));
        const auto* m2 =
            std::get_if<MeasureOp>(&at(ops, site + 3, "box_bell_meas"));
        if (!cz || cz->q1 != b || !m1 || m1->basis != 'X' ||
            m1->qubit != cz->q0 || !m2 || m2->basis != 'X' ||
            m2->qubit != b) {
          mismatch("box_bell_meas: window is not h b; cz a b; mx a; mx b");
        }
        ops[site] = BellMeasureOp{cz->q0, b, m1->bit, m2->bit};
        ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1,
                  ops.begin() + static_cast<std::ptrdiff_t>(site) + 4);
      }
      break;
    }

    case RewriteRule::BoxGeneralizedBell: {
      const CircuitOp& first = at(ops, site, "box_generalized_bell");
      if (const auto* gb = std::get_if<GenBellMeasureOp>(&first)) {
        const RotOp rot{gb->axis, gb->side == 1 ? gb->q1 : gb->q2, gb->angle};
        const BellMeasureOp bm{gb->q1, gb->q2, gb->bit1, gb->bit2};
        ops[site] = rot;
        ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1, bm);
      } else {
        const auto* rot = std::get_if<RotOp>(&first);
        const auto* bm = std::get_if<BellMeasureOp>(
            &at(ops, site + 1, "box_generalized_bell"));
        if (!rot || !bm) {
          mismatch("box_generalized_bell: window is not a rotation followed"
                   " by a Bell measurement");
        }
        int side = 0;
        if (rot->qubit == bm->q1) {
          side = 1;
        } else if (rot->qubit == bm->q2) {
          side = 2;
        } else {
          mismatch("box_generalized_bell: rotation acts outside the measured"
                   " pair");
        }
        GenBellMeasureOp boxed;
        boxed.axis = rot->axis;
        boxed.angle = rot->angle;
        boxed.side = side;
        boxed.q1 = bm->q1;
        boxed.q2 = bm->q2;
        boxed.bit1 = bm->bit1;
        boxed.bit2 = bm->bit2;
        ops[site] = boxed;
        ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(site) + 1);
      }
      break;
    }
  }
  return {std::move(out), inv};
}

std::string RewriteTrace::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["start"] = circuit_json(start);
  j["steps"] = nlohmann::json::array();
  for (const TraceStep& step : steps) {
    nlohmann::ordered_json s;
    s["rule"] = rule_name(step.applied.rule);
    s["site"] = step.applied.site;
    if (step.applied.qubit) s["qubit"] = *step.applied.qubit;
    if (step.applied.site2) s["site2"] = *step.applied.site2;
    s["circuit_hash"] = hash_hex(step.circuit.hash());
    j["steps"].push_back(std::move(s));
  }
  j["end"] = circuit_json(end());
  return j.dump(2);
}

RewriteTrace invert_trace(const RewriteTrace& t) {
  RewriteTrace inv;
  inv.name = t.name + "_inverted";
  inv.start = t.end();
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) {
    Applied a = apply_rule(inv.end(), it->inverse);
    inv.steps.push_back(TraceStep{it->inverse, a.inverse,
                                  std::move(a.circuit)});
  }
  if (inv.end().pretty() != t.start.pretty()) {
    throw std::logic_error("trace inversion failed to restore the start"
                           " circuit");
  }
  return inv;
}

namespace {

// Site lookups for the shipped derivations. Each throws when the op is
// missing so a build mistake surfaces as a loud failure instead of an
// off-by-one rewrite.
[[noreturn]] void not_found(const std::string& what) {
  throw std::logic_error("rewrite trace construction: " + what);
}

std::size_t find_prep(const Circuit& c, unsigned q) {
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (const auto* p = std::get_if<PrepOp>(&c.ops[i]); p && p->qubit == q) {
      return i;
    }
  }
  not_found("no preparation on qubit " + std::to_string(q));
}

std::size_t find_h(const Circuit& c, unsigned q) {
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (const CliffordGate* g = as_gate(c.ops[i], CliffordKind::H);
        g && g->q0 == q) {
      return i;
    }
  }
  not_found("no h on qubit " + std::to_string(q));
}

std::size_t find_cz(const Circuit& c, unsigned a, unsigned b) {
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (const CliffordGate* g = as_gate(c.ops[i], CliffordKind::CZ);
        g && g->q0 == a && g->q1 == b) {
      return i;
    }
  }
  not_found("no cz " + std::to_string(a) + " " + std::to_string(b));
}

std::size_t find_cnot(const Circuit& c) {
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (as_gate(c.ops[i], CliffordKind::CNOT)) return i;
  }
  not_found("no cnot");
}

std::size_t find_meas_e(const Circuit& c) {
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (const auto* m = std::get_if<MeasureOp>(&c.ops[i]);
        m && m->basis == 'E') {
      return i;
    }
  }
  not_found("no equatorial measurement");
}

std::size_t find_meas(const Circuit& c, unsigned q) {
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (const auto* m = std::get_if<MeasureOp>(&c.ops[i]);
        m && m->qubit == q) {
      return i;
    }
  }
  not_found("no measurement on qubit " + std::to_string(q));
}

std::size_t find_rot(const Circuit& c, unsigned q) {
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (const auto* r = std::get_if<RotOp>(&c.ops[i]); r && r->qubit == q) {
      return i;
    }
  }
  not_found("no rotation on qubit " + std::to_string(q));
}

std::size_t find_bellprep(const Circuit& c, unsigned q1, unsigned q2) {
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (const auto* bp = std::get_if<BellPrepOp>(&c.ops[i]);
        bp && bp->q1 == q1 && bp->q2 == q2) {
      return i;
    }
  }
  not_found("no Bell preparation on " + std::to_string(q1) + ", " +
            std::to_string(q2));
}

std::size_t find_bellmeas(const Circuit& c, unsigned q1, unsigned q2) {
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (const auto* bm = std::get_if<BellMeasureOp>(&c.ops[i]);
        bm && bm->q1 == q1 && bm->q2 == q2) {
      return i;
    }
  }
  not_found("no Bell measurement on " + std::to_string(q1) + ", " +
            std::to_string(q2));
}

struct Builder {
  RewriteTrace trace;

  Builder(std::string name, Circuit start) {
    trace.name = std::move(name);
    trace.start = std::move(start);
  }

  const Circuit& cur() const { return trace.end(); }

  void step(RewriteRule rule, std::size_t site,
            std::optional<unsigned> qubit = std::nullopt,
            std::optional<std::size_t> site2 = std::nullopt) {
    const RuleApplication app{rule, site, qubit, site2};
    Applied a = apply_rule(cur(), app);
    trace.steps.push_back(TraceStep{app, a.inverse, std::move(a.circuit)});
  }
};

}  // namespace

RewriteTrace map_wire_to_teleportation() {
  Builder b("wire", pattern_to_circuit(pattern_wire()));
  // Split the chain between the two entanglers, box the output-side half
  // into a Bell pair and the input-side half into a Bell measurement.
  b.step(RewriteRule::InsertHH, find_cz(b.cur(), 0, 1), 1u);
  b.step(RewriteRule::BoxBellPrep, find_prep(b.cur(), 1));
  b.step(RewriteRule::BoxBellMeas, find_h(b.cur(), 1));
  return b.trace;
}

RewriteTrace map_rotation_to_generalized_bell(char axis, double angle) {
  if (axis != 'x' && axis != 'z') {
    throw std::invalid_argument("rotation axis must be 'x' or 'z'");
  }
  const bool zrot = axis == 'z';
  Builder b(zrot ? "zrot" : "xrot",
            pattern_to_circuit(zrot ? pattern_zrot(angle)
                                    : pattern_xrot(angle)));
  // Peel the equatorial measurement into an explicit z rotation, slide the
  // rotation off the chain, then box as for the wire. The leftover rotation
  // lands against the Bell measurement and folds into its basis.
  b.step(RewriteRule::EquatorialToUzX, find_meas_e(b.cur()));
  if (!zrot) {
    // The rotation on the middle qubit is signed by the pending first
    // outcome; swapping it before that measurement is fine because forced
    // branches fix all outcomes up front.
    b.step(RewriteRule::CommuteDisjoint, find_meas(b.cur(), 0));
  }
  b.step(RewriteRule::CommuteUzCz, find_cz(b.cur(), 0, 1));
  b.step(RewriteRule::InsertHH, find_cz(b.cur(), 1, 2) + 1, 1u);
  b.step(RewriteRule::BoxBellPrep, find_prep(b.cur(), 1));
  if (zrot) {
    b.step(RewriteRule::CommuteDisjoint, find_h(b.cur(), 1));
  } else {
    b.step(RewriteRule::CommuteHRot, find_h(b.cur(), 1));
  }
  b.step(RewriteRule::BoxBellMeas, find_h(b.cur(), 1));
  b.step(RewriteRule::BoxGeneralizedBell, find_rot(b.cur(), zrot ? 0u : 1u));
  return b.trace;
}

Circuit cnot_teleport_circuit() {
  Circuit c;
  c.num_qubits = 6;
  c.inputs = {0, 1};
  c.outputs = {4, 5};
  c.ops.push_back(BellPrepOp{2, 4});
  c.ops.push_back(BellPrepOp{3, 5});
  c.ops.push_back(GateOp{{CliffordKind::CNOT, 4, 5}});
  c.ops.push_back(BellMeasureOp{0, 2, 0, 2});
  c.ops.push_back(BellMeasureOp{1, 3, 1, 3});
  // Corrections match the cluster pattern's accounting; outcome ids equal
  // the measured qubit ids on both sides of the mapping.
  const Pattern p = pattern_cnot6();
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

RewriteTrace map_cnot_between_models(MapDirection direction) {
  Builder b("cnot_tqc_to_1wqc", cnot_teleport_circuit());
  // Unbox everything, then push the transversal cnot into the entangler
  // layer: it swallows a cz on its target (leaving the bridging cz that
  // becomes the cluster's middle edge) and dies against the fresh |+>.
  b.step(RewriteRule::BoxBellPrep, find_bellprep(b.cur(), 2, 4));
  b.step(RewriteRule::BoxBellPrep, find_bellprep(b.cur(), 3, 5));
  b.step(RewriteRule::CommuteDisjoint, find_cnot(b.cur()) - 1);
  b.step(RewriteRule::CommuteCnotCz, find_cz(b.cur(), 3, 5));
  b.step(RewriteRule::CnotOnPlusPlus, find_prep(b.cur(), 5));
  b.step(RewriteRule::BoxBellMeas, find_bellmeas(b.cur(), 0, 2));
  b.step(RewriteRule::BoxBellMeas, find_bellmeas(b.cur(), 1, 3));
  b.step(RewriteRule::CancelHH, find_h(b.cur(), 2));
  b.step(RewriteRule::CancelHH, find_h(b.cur(), 3));
  if (direction == MapDirection::TqcToOneWay) return b.trace;
  RewriteTrace inv = invert_trace(b.trace);
  inv.name = "cnot_1wqc_to_tqc";
  return inv;
}

TraceReport validate_trace(const RewriteTrace& t, const WireUnitary& intended,
                           double tol) {
  TraceReport rep;
  rep.steps = static_cast<unsigned>(t.steps.size());
  try {
    Circuit cur = t.start;
    for (const TraceStep& step : t.steps) {
      Applied a = apply_rule(cur, step.applied);
      if (a.circuit.pretty() != step.circuit.pretty()) {
        rep.failure = std::string("stored circuit diverges from replay at ") +
                      rule_name(step.applied.rule);
        return rep;
      }
      const EquivalenceReport eq = verify_equivalence(cur, a.circuit, tol);
      if (!eq.equivalent) {
        rep.failure = std::string(rule_name(step.applied.rule)) +
                      " did not preserve the channel: " + eq.counterexample;
        return rep;
      }
      rep.branches = eq.branches;
      rep.worst_probability_gap =
          std::max(rep.worst_probability_gap, eq.worst_probability_gap);
      rep.worst_fidelity_deficit =
          std::max(rep.worst_fidelity_deficit, eq.worst_fidelity_deficit);
      cur = std::move(a.circuit);
    }
    const EquivalenceReport fin = verify_implements(cur, intended);
    rep.worst_probability_gap =
        std::max(rep.worst_probability_gap, fin.worst_probability_gap);
    rep.worst_fidelity_deficit =
        std::max(rep.worst_fidelity_deficit, fin.worst_fidelity_deficit);
    if (fin.worst_probability_gap > tol || fin.worst_fidelity_deficit > tol) {
      rep.failure = "end circuit does not implement the intended unitary";
      return rep;
    }
    rep.ok = true;
  } catch (const std::exception& e) {
    rep.failure = e.what();
  }
  return rep;
}

}  // namespace mbqc
