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
#include <string>
#include <vector>

#include "mbqc/graph.hpp"
#include "mbqc/pauli.hpp"
#include "mbqc/policy.hpp"
#include "mbqc/tableau.hpp"

namespace mbqc {

// Subdivision of a base graph: ancilla vertex base.n + k sits in the middle
// of base edge k, splitting it into two auxiliary edges. The subdivision is
// bipartite between base vertices and ancillas, and every ancilla has
// degree 2, so the maximum degree is max(base max degree, 2) whenever the
// base has an edge.
struct AuxGraph {
  Graph base;
  Graph graph;

  unsigned num_ancillas() const { return graph.n - base.n; }
  unsigned ancilla(std::size_t edge_index) const {
    return base.n + static_cast<unsigned>(edge_index);
  }
};

AuxGraph build_aux_graph(const Graph& g);

// Proper edge coloring; color[e] pairs with graph.edges[e] and colors run
// 0..num_colors-1.
struct EdgeColoring {
  std::vector<unsigned> color;
  unsigned num_colors = 0;
};

// Colors a bipartite graph with exactly max_degree colors by alternating-
// path recoloring. Edges are taken in their stored (min, max) lexicographic
// order and colors are tried ascending, so the result is deterministic.
// Throws std::invalid_argument when the graph is not bipartite.
EdgeColoring bipartite_edge_coloring(const Graph& g);

// One measurement of a schedule. The obs letters pair positionally with
// qubits ("ZX" on {0, 5} is Z_0 X_5). A nonempty init names the state this
// measurement's fresh ancilla must be prepared in beforehand: "+" or "0"
// for a lone ancilla, "omega" for the edge's entangled ancilla pair.
struct ScheduledMeasurement {
  std::string obs;
  std::vector<unsigned> qubits;
  std::string init;
};

// Timed plan that prepares the graph state of base with two-qubit
// measurements. Within one round no two measurements share a qubit. All
// single-qubit ancilla projections sit together in the final round, so
// depth == rounds.size() + 1. Ancilla qubits are numbered from base.n up.
struct MeasurementSchedule {
  char procedure = 'A';
  Graph base;
  unsigned total_qubits = 0;
  std::vector<unsigned> ancillas;
  std::vector<std::vector<ScheduledMeasurement>> rounds;
  std::vector<ScheduledMeasurement> final_round;
  unsigned depth = 0;

  std::string to_json() const;
};

// Compiles a graph into a measurement schedule.
//
// Procedure 'A' spends one entangled ancilla pair (p, q) per edge (i, j)
// and measures Z_i X_p and X_q Z_j. Each observable touches exactly one
// graph qubit, so observables conflict only at shared graph vertices and
// greedy packing in edge order fills exactly max_degree rounds.
//
// Procedure 'B' spends one ancilla a per edge (i, j) and measures Z_i Z_a
// and X_a Z_j at the rounds given by the edge coloring of the subdivision.
// When the ZZ half fires first the ancilla starts in |+> and is finally
// projected along Z; when the order is reversed it starts in |0> and is
// finally projected along X.
//
// Throws std::invalid_argument for an empty edge set or unknown procedure.
MeasurementSchedule build_schedule(const Graph& g, char procedure);

struct ScheduleExecution {
  // Final state on the base graph qubits, one generator per vertex in
  // vertex order.
  StabilizerTableau tableau;
  // Pauli frame mapping the prepared state to the graph state: Z on each
  // vertex whose stabilizer came out with a flipped sign.
  PauliString corrections;
  std::vector<std::string> log;
};

// Runs the schedule on a stabilizer tableau: graph qubits start in |+>,
// ancillas as scheduled, then every round in order. The surviving state on
// the base qubits matches the target graph state up to the returned
// corrections. Throws std::logic_error if a round reuses a qubit or if the
// schedule leaves some graph stabilizer unpinned.
ScheduleExecution execute_schedule(const MeasurementSchedule& sched,
                                   OutcomePolicy& policy);

}  // namespace mbqc
