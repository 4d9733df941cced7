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

#include "mbqc/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mbqc/gf2.hpp"

namespace mbqc {

StabilizerTableau StabilizerTableau::from_graph(const Graph& g) {
  StabilizerTableau t(g.n);
  auto adj = g.adjacency();
  for (unsigned v = 0; v < g.n; ++v) {
    PauliString s(g.n, v, Pauli::X);
    for (unsigned w : adj[v]) s.set_letter(w, Pauli::Z);
    t.add_pair(std::move(s), PauliString(g.n, v, Pauli::Z));
  }
  return t;
}

void StabilizerTableau::add_pair(PauliString stab, PauliString destab) {
  if (stab.size() != n_ || destab.size() != n_) {
    throw std::invalid_argument("operator size does not match tableau");
  }
  if (stab.phase_exp() & 1u) {
    throw std::invalid_argument("stabilizer phase must be a sign");
  }
  if (stab.commutes_with(destab)) {
    throw std::invalid_argument("destabilizer must anticommute with its row");
  }
  for (unsigned i = 0; i < stabs_.size(); ++i) {
    if (!stab.commutes_with(stabs_[i]) || !stab.commutes_with(destabs_[i]) ||
        !destab.commutes_with(stabs_[i]) ||
        !destab.commutes_with(destabs_[i])) {
      throw std::invalid_argument("new row clashes with an existing row");
    }
  }
  stabs_.push_back(std::move(stab));
  destabs_.push_back(std::move(destab));
}

void StabilizerTableau::add_plus(unsigned q) {
  add_pair(PauliString(n_, q, Pauli::X), PauliString(n_, q, Pauli::Z));
}

void StabilizerTableau::add_zero(unsigned q) {
  add_pair(PauliString(n_, q, Pauli::Z), PauliString(n_, q, Pauli::X));
}

void StabilizerTableau::add_edge_pair(unsigned a, unsigned b) {
  PauliString s1(n_, a, Pauli::X);
  s1.set_letter(b, Pauli::Z);
  PauliString s2(n_, a, Pauli::Z);
  s2.set_letter(b, Pauli::X);
  add_pair(std::move(s1), PauliString(n_, a, Pauli::Z));
  add_pair(std::move(s2), PauliString(n_, b, Pauli::Z));
}

void StabilizerTableau::track(std::string label, PauliString op) {
  if (op.size() != n_) {
    throw std::invalid_argument("operator size does not match tableau");
  }
  for (const PauliString& s : stabs_) {
    if (!op.commutes_with(s)) {
      throw std::invalid_argument("tracked operator clashes with stabilizer");
    }
  }
  tracked_.push_back(TrackedOp{std::move(label), std::move(op)});
}

PauliString& StabilizerTableau::tracked_op(const std::string& label) {
  for (TrackedOp& t : tracked_) {
    if (t.label == label) return t.op;
  }
  throw std::out_of_range("no tracked operator named " + label);
}

MeasurementRecord StabilizerTableau::measure_pauli(const PauliString& obs,
                                                   OutcomePolicy& policy) {
  if (obs.size() != n_) {
    throw std::invalid_argument("observable size does not match tableau");
  }
  if (obs.phase_exp() != 0) {
    throw std::invalid_argument("observable must carry phase +1");
  }

  std::vector<unsigned> anti;
  for (unsigned i = 0; i < stabs_.size(); ++i) {
    if (!obs.commutes_with(stabs_[i])) anti.push_back(i);
  }

  if (!anti.empty()) {
    // Random outcome. The first anticommuting row retires in place; every
    // other clashing row absorbs it so the group stays commuting.
    unsigned p = anti[0];
    PauliString retiring = stabs_[p];
    for (unsigned i = 1; i < anti.size(); ++i) {
      stabs_[anti[i]].multiply_right(retiring);
    }
    for (unsigned i = 0; i < destabs_.size(); ++i) {
      if (i != p && !obs.commutes_with(destabs_[i])) {
        destabs_[i].multiply_right(retiring);
      }
    }
    for (TrackedOp& t : tracked_) {
      if (!obs.commutes_with(t.op)) t.op.multiply_right(retiring);
    }
    int b = policy.next_bit();
    destabs_[p] = std::move(retiring);
    stabs_[p] = obs;
    stabs_[p].set_phase_exp(b ? 2 : 0);
    return MeasurementRecord{obs, b, false};
  }

  // Commuting case: reconstruct the observable from the generators flagged
  // by anticommuting destabilizers. A letter mismatch means the observable
  // is independent of the group.
  PauliString prod(n_);
  for (unsigned i = 0; i < stabs_.size(); ++i) {
    if (!obs.commutes_with(destabs_[i])) prod.multiply_right(stabs_[i]);
  }
  if (!prod.equal_letters(obs)) {
    throw std::logic_error(
        "measurement outcome depends on unstabilized degrees of freedom");
  }
  int outcome = prod.sign() == 1 ? 0 : 1;
  return MeasurementRecord{obs, outcome, true};
}

void StabilizerTableau::apply_pauli(const PauliString& p) {
  if (p.size() != n_) {
    throw std::invalid_argument("operator size does not match tableau");
  }
  auto flip = [&p](PauliString& op) {
    if (!op.commutes_with(p)) op.set_phase_exp((op.phase_exp() + 2) & 3u);
  };
  for (PauliString& s : stabs_) flip(s);
  for (PauliString& d : destabs_) flip(d);
  for (TrackedOp& t : tracked_) flip(t.op);
}

StabilizerTableau::ZDeletion StabilizerTableau::delete_qubit_z(
    unsigned q, OutcomePolicy& policy) {
  GraphForm form = graph_form();  // validates shape; throws otherwise
  if (stabs_.size() != n_) {
    throw std::logic_error("graph-form deletion needs a full tableau");
  }
  for (const TrackedOp& t : tracked_) {
    if (t.op.letter(q) != Pauli::I) {
      throw std::logic_error("tracked operator touches the deleted qubit");
    }
  }

  unsigned row = n_;
  for (unsigned i = 0; i < stabs_.size(); ++i) {
    if (stabs_[i].letter(q) == Pauli::X) {
      row = i;
      break;
    }
  }
  if (row == n_) throw std::logic_error("no row carries X on the qubit");

  // Z_q anticommutes with exactly the row whose X sits on q, so the
  // outcome is always a fresh random bit.
  ZDeletion result;
  result.outcome = policy.next_bit();
  for (unsigned v = 0; v < n_; ++v) {
    if (v != q && stabs_[row].letter(v) == Pauli::Z) {
      result.neighbors.push_back(v);
    }
  }

  std::vector<PauliString> kept;
  for (unsigned i = 0; i < stabs_.size(); ++i) {
    if (i == row) continue;
    PauliString s(n_ - 1);
    s.set_phase_exp(stabs_[i].phase_exp());
    for (unsigned v = 0, w = 0; v < n_; ++v) {
      if (v == q) continue;
      s.set_letter(w++, stabs_[i].letter(v));
    }
    kept.push_back(std::move(s));
  }
  std::vector<TrackedOp> new_tracked;
  for (const TrackedOp& t : tracked_) {
    PauliString op(n_ - 1);
    op.set_phase_exp(t.op.phase_exp());
    for (unsigned v = 0, w = 0; v < n_; ++v) {
      if (v == q) continue;
      op.set_letter(w++, t.op.letter(v));
    }
    new_tracked.push_back(TrackedOp{t.label, std::move(op)});
  }

  n_ -= 1;
  stabs_ = std::move(kept);
  destabs_.clear();
  for (unsigned v = 0; v < n_; ++v) {
    destabs_.push_back(PauliString(n_, v, Pauli::Z));
  }
  tracked_ = std::move(new_tracked);
  return result;
}

void StabilizerTableau::reduce_tracked_over(
    const std::vector<unsigned>& columns) {
  if (columns.empty()) return;
  const unsigned k = num_stabilizers();
  const auto m = static_cast<unsigned>(columns.size());

  // One X-row and one Z-row per cleared column: find stabilizer exponents
  // x_i with support(T * prod S_i^{x_i}) avoiding the columns.
  gf2::Matrix a(2 * m, k);
  for (unsigned c = 0; c < m; ++c) {
    for (unsigned i = 0; i < k; ++i) {
      Pauli l = stabs_[i].letter(columns[c]);
      a.at(2 * c, i) = (l == Pauli::X || l == Pauli::Y) ? 1 : 0;
      a.at(2 * c + 1, i) = (l == Pauli::Z || l == Pauli::Y) ? 1 : 0;
    }
  }
  for (TrackedOp& t : tracked_) {
    std::vector<uint8_t> b(2 * m, 0);
    for (unsigned c = 0; c < m; ++c) {
      Pauli l = t.op.letter(columns[c]);
      b[2 * c] = (l == Pauli::X || l == Pauli::Y) ? 1 : 0;
      b[2 * c + 1] = (l == Pauli::Z || l == Pauli::Y) ? 1 : 0;
    }
    auto x = gf2::solve(a, b);
    if (!x) {
      throw std::logic_error("tracked operator cannot clear column " +
                             t.label);
    }
    for (unsigned i = 0; i < k; ++i) {
      if ((*x)[i]) t.op.multiply_right(stabs_[i]);
    }
  }
}

StabilizerTableau::GraphForm StabilizerTableau::graph_form() const {
  std::vector<int> owner(n_, -1);
  std::vector<int> signs(n_, 1);
  for (unsigned i = 0; i < stabs_.size(); ++i) {
    int x_at = -1;
    for (unsigned v = 0; v < n_; ++v) {
      Pauli l = stabs_[i].letter(v);
      if (l == Pauli::Y) throw std::logic_error("row carries a Y letter");
      if (l == Pauli::X) {
        if (x_at >= 0) throw std::logic_error("row carries two X letters");
        x_at = static_cast<int>(v);
      }
    }
    if (x_at < 0) throw std::logic_error("row carries no X letter");
    if (owner[x_at] >= 0) throw std::logic_error("two rows share an X vertex");
    owner[x_at] = static_cast<int>(i);
    signs[x_at] = stabs_[i].sign();
  }

  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned v = 0; v < n_; ++v) {
    if (owner[v] < 0) throw std::logic_error("vertex owns no row");
    const PauliString& s = stabs_[owner[v]];
    for (unsigned w = 0; w < n_; ++w) {
      if (s.letter(w) == Pauli::Z) {
        if (stabs_[owner[w]].letter(v) != Pauli::Z) {
          throw std::logic_error("Z pattern is not symmetric");
        }
        if (v < w) edges.emplace_back(v, w);
      }
    }
  }
  return GraphForm{Graph::from_edges(n_, std::move(edges)), std::move(signs)};
}

std::string StabilizerTableau::render(const std::string& title) const {
  std::ostringstream out;
  out << title << "\n";
  out << "S:\n";
  for (const PauliString& s : stabs_) out << "  " << s.str() << "\n";
  if (!tracked_.empty()) {
    out << "tracked:\n";
    for (const TrackedOp& t : tracked_) {
      out << "  " << t.label << ": " << t.op.str() << "\n";
    }
  }
  return out.str();
}

}  // namespace mbqc
