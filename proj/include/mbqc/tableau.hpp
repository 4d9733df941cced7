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
#include <utility>
#include <vector>

#include "mbqc/graph.hpp"
#include "mbqc/pauli.hpp"
#include "mbqc/policy.hpp"

namespace mbqc {

// Named operator carried through measurements alongside the stabilizers,
// e.g. the logical X and Z of an encoded qubit.
struct TrackedOp {
  std::string label;
  PauliString op;
};

struct MeasurementRecord {
  PauliString observable;
  int outcome = 0;
  bool deterministic = false;
};

// Stabilizer tableau over n qubits holding k <= n stabilizer generators.
// Invariants maintained throughout:
//  - stabilizers commute pairwise and carry sign phases only (i^0 or i^2);
//  - destabilizer i anticommutes with stabilizer i and commutes with every
//    other stabilizer and destabilizer;
//  - tracked operators commute with all stabilizers.
// Rows keep their positions across measurements: a measurement replaces one
// row in place rather than reordering, so printed blocks stay aligned with
// the narrative of a protocol.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(unsigned n) : n_(n) {}

  // Graph state: one stabilizer X_v prod_{w in N(v)} Z_w per vertex.
  static StabilizerTableau from_graph(const Graph& g);

  void add_pair(PauliString stab, PauliString destab);
  void add_plus(unsigned q);        // |+>: stabilizer X_q
  void add_zero(unsigned q);        // |0>: stabilizer Z_q
  void add_edge_pair(unsigned a, unsigned b);  // 2-qubit graph state

  void track(std::string label, PauliString op);

  unsigned num_qubits() const { return n_; }
  unsigned num_stabilizers() const {
    return static_cast<unsigned>(stabs_.size());
  }
  const PauliString& stabilizer(unsigned i) const { return stabs_.at(i); }
  const PauliString& destabilizer(unsigned i) const { return destabs_.at(i); }
  const std::vector<TrackedOp>& tracked() const { return tracked_; }
  PauliString& tracked_op(const std::string& label);

  // Measures a +1-phase Pauli observable. Consumes one policy bit iff the
  // outcome is random. Throws if the observable commutes with the group but
  // is not in it (the outcome would depend on unstabilized degrees of
  // freedom).
  MeasurementRecord measure_pauli(const PauliString& obs,
                                  OutcomePolicy& policy);

  // Conjugation by a Pauli: flips the sign of each generator and tracked
  // operator that anticommutes with p.
  void apply_pauli(const PauliString& p);

  struct ZDeletion {
    int outcome = 0;
    // Former neighbors of the deleted vertex, in pre-deletion indexing.
    // The byproduct is Z^outcome on each of them.
    std::vector<unsigned> neighbors;
  };

  // Measures Z on vertex q of a graph-form tableau and removes the qubit.
  // Columns above q shift down by one; destabilizers are rebuilt as Z_v.
  // Tracked operators must not touch q.
  ZDeletion delete_qubit_z(unsigned q, OutcomePolicy& policy);

  // Rewrites each tracked operator modulo the stabilizer group so that it
  // has identity on every listed column. Throws if a column cannot be
  // cleared.
  void reduce_tracked_over(const std::vector<unsigned>& columns);

  struct GraphForm {
    Graph graph;
    std::vector<int> signs;  // sign of the row whose X sits on each vertex
  };

  // Requires one X per row on distinct vertices, no Y letters, and a
  // symmetric Z pattern.
  GraphForm graph_form() const;

  // Text block: title, "S:" with one stabilizer per line, then "tracked:"
  // with "label: +XIII" lines when any operators are tracked.
  std::string render(const std::string& title) const;

 private:
  unsigned n_;
  std::vector<PauliString> stabs_;
  std::vector<PauliString> destabs_;
  std::vector<TrackedOp> tracked_;
};

}  // namespace mbqc
