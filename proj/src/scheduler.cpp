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

#include "mbqc/scheduler.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace mbqc {
namespace {

constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

void require_bipartite(const Graph& g) {
  std::vector<int> side(g.n, -1);
  const auto adj = g.adjacency();
  for (unsigned s = 0; s < g.n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<unsigned> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      const unsigned v = bfs.front();
      bfs.pop();
      for (unsigned w : adj[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          bfs.push(w);
        } else if (side[w] == side[v]) {
          throw std::invalid_argument("edge coloring needs a bipartite graph");
        }
      }
    }
  }
}

std::size_t edge_index(const Graph& g, unsigned a, unsigned b) {
  if (a > b) std::swap(a, b);
  const auto it = std::lower_bound(g.edges.begin(), g.edges.end(),
                                   std::make_pair(a, b));
  if (it == g.edges.end() || *it != std::make_pair(a, b)) {
    throw std::logic_error("edge lookup missed");
  }
  return static_cast<std::size_t>(it - g.edges.begin());
}

std::string qubit_list(const std::vector<unsigned>& qs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out << ",";
    out << qs[i];
  }
  return out.str();
}

}  // namespace

AuxGraph build_aux_graph(const Graph& g) {
  std::vector<std::pair<unsigned, unsigned>> aux_edges;
  aux_edges.reserve(2 * g.edges.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const unsigned a = g.n + static_cast<unsigned>(k);
    aux_edges.emplace_back(g.edges[k].first, a);
    aux_edges.emplace_back(g.edges[k].second, a);
  }
  const unsigned total = g.n + static_cast<unsigned>(g.edges.size());
  return AuxGraph{g, Graph::from_edges(total, std::move(aux_edges))};
}

EdgeColoring bipartite_edge_coloring(const Graph& g) {
  require_bipartite(g);

  EdgeColoring out;
  out.color.assign(g.edges.size(), 0);
  if (g.edges.empty()) return out;

  // A bipartite graph is edge-colorable with exactly max_degree colors;
  // the palette never needs to grow past it.
  const unsigned palette = g.max_degree();
  out.num_colors = palette;

  // at[v][c] holds the index of the c-colored edge at v, if any.
  std::vector<std::vector<std::size_t>> at(
      g.n, std::vector<std::size_t>(palette, kNoEdge));

  const auto smallest_free = [&](unsigned v) {
    for (unsigned c = 0; c < palette; ++c) {
      if (at[v][c] == kNoEdge) return c;
    }
    throw std::logic_error("no free color below the degree bound");
  };
  const auto place = [&](std::size_t e, unsigned c) {
    out.color[e] = c;
    at[g.edges[e].first][c] = e;
    at[g.edges[e].second][c] = e;
  };

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];

    unsigned both = palette;
    for (unsigned c = 0; c < palette; ++c) {
      if (at[u][c] == kNoEdge && at[v][c] == kNoEdge) {
        both = c;
        break;
      }
    }
    if (both < palette) {
      place(e, both);
      continue;
    }

    // No shared free color: alpha is free at u but taken at v, beta the
    // other way around. Swapping alpha and beta along the alternating path
    // that starts at v frees alpha there. The path cannot reach u, since u
    // has no alpha edge and an arrival by beta would close an odd cycle.
    const unsigned alpha = smallest_free(u);
    const unsigned beta = smallest_free(v);
    std::vector<std::size_t> path;
    unsigned cur = v;
    unsigned want = alpha;
    while (at[cur][want] != kNoEdge) {
      const std::size_t pe = at[cur][want];
      path.push_back(pe);
      cur = g.edges[pe].first == cur ? g.edges[pe].second : g.edges[pe].first;
      want = want == alpha ? beta : alpha;
    }
    for (std::size_t pe : path) {
      const unsigned c = out.color[pe];
      at[g.edges[pe].first][c] = kNoEdge;
      at[g.edges[pe].second][c] = kNoEdge;
      out.color[pe] = c == alpha ? beta : alpha;
    }
    for (std::size_t pe : path) {
      at[g.edges[pe].first][out.color[pe]] = pe;
      at[g.edges[pe].second][out.color[pe]] = pe;
    }
    place(e, alpha);
  }
  return out;
}

std::string MeasurementSchedule::to_json() const {
  const auto entry = [](const ScheduledMeasurement& m) {
    nlohmann::ordered_json j;
    j["obs"] = m.obs;
    j["qubits"] = m.qubits;
    if (!m.init.empty()) j["init"] = m.init;
    return j;
  };

  nlohmann::ordered_json j;
  j["procedure"] = std::string(1, procedure);
  j["rounds"] = nlohmann::json::array();
  for (const auto& round : rounds) {
    nlohmann::ordered_json r = nlohmann::json::array();
    for (const auto& m : round) r.push_back(entry(m));
    j["rounds"].push_back(std::move(r));
  }
  j["final"] = nlohmann::json::array();
  for (const auto& m : final_round) j["final"].push_back(entry(m));
  j["depth"] = depth;
  j["ancillas"] = ancillas;
  return j.dump(2);
}

MeasurementSchedule build_schedule(const Graph& g, char procedure) {
  if (g.edges.empty()) {
    throw std::invalid_argument("scheduling needs at least one edge");
  }
  if (procedure != 'A' && procedure != 'B') {
    throw std::invalid_argument("unknown procedure (expected A or B)");
  }

  MeasurementSchedule s;
  s.procedure = procedure;
  s.base = g;
  const std::size_t num_edges = g.edges.size();

  if (procedure == 'A') {
    s.total_qubits = g.n + 2 * static_cast<unsigned>(num_edges);
    s.rounds.assign(g.max_degree(), {});
    // Rank of the next unplaced observable at each graph vertex. The
    // observables touching one vertex form the only conflicts, so rank
    // equals round and the packing is optimal.
    std::vector<unsigned> rank(g.n, 0);
    for (std::size_t k = 0; k < num_edges; ++k) {
      const auto [i, j] = g.edges[k];
      const unsigned p = g.n + 2 * static_cast<unsigned>(k);
      const unsigned q = p + 1;
      s.ancillas.push_back(p);
      s.ancillas.push_back(q);

      const unsigned ri = rank[i]++;
      const unsigned rj = rank[j]++;
      ScheduledMeasurement zi{"ZX", {i, p}, ""};
      ScheduledMeasurement xj{"XZ", {q, j}, ""};
      // The pair is created right before whichever half fires first.
      if (ri <= rj) {
        zi.init = "omega";
      } else {
        xj.init = "omega";
      }
      s.rounds[ri].push_back(std::move(zi));
      s.rounds[rj].push_back(std::move(xj));
      s.final_round.push_back({"Z", {p}, ""});
      s.final_round.push_back({"Z", {q}, ""});
    }
  } else {
    s.total_qubits = g.n + static_cast<unsigned>(num_edges);
    const AuxGraph aux = build_aux_graph(g);
    const EdgeColoring coloring = bipartite_edge_coloring(aux.graph);
    s.rounds.assign(coloring.num_colors, {});
    for (std::size_t k = 0; k < num_edges; ++k) {
      const auto [i, j] = g.edges[k];
      const unsigned a = aux.ancilla(k);
      s.ancillas.push_back(a);

      const unsigned r_zz = coloring.color[edge_index(aux.graph, i, a)];
      const unsigned r_xz = coloring.color[edge_index(aux.graph, a, j)];
      ScheduledMeasurement zz{"ZZ", {i, a}, ""};
      ScheduledMeasurement xz{"XZ", {a, j}, ""};
      if (r_zz < r_xz) {
        zz.init = "+";
        s.final_round.push_back({"Z", {a}, ""});
      } else {
        xz.init = "0";
        s.final_round.push_back({"X", {a}, ""});
      }
      s.rounds[r_zz].push_back(std::move(zz));
      s.rounds[r_xz].push_back(std::move(xz));
    }
  }

  s.depth = static_cast<unsigned>(s.rounds.size()) + 1;
  return s;
}

ScheduleExecution execute_schedule(const MeasurementSchedule& sched,
                                   OutcomePolicy& policy) {
  const Graph& g = sched.base;
  StabilizerTableau t(sched.total_qubits);
  std::vector<std::string> log;

  for (unsigned v = 0; v < g.n; ++v) t.add_plus(v);
  if (sched.procedure == 'A') {
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      const unsigned p = g.n + 2 * static_cast<unsigned>(k);
      t.add_edge_pair(p, p + 1);
    }
  } else {
    // Each ancilla's preparation is recorded on the first measurement that
    // touches it.
    std::vector<char> prepared(sched.total_qubits, 0);
    for (const auto& round : sched.rounds) {
      for (const auto& m : round) {
        if (m.init.empty()) continue;
        unsigned a = sched.total_qubits;
        for (unsigned qb : m.qubits) {
          if (qb >= g.n) a = qb;
        }
        if (a == sched.total_qubits || prepared[a]) {
          throw std::logic_error("malformed ancilla initialization tag");
        }
        prepared[a] = 1;
        if (m.init == "+") {
          t.add_plus(a);
        } else if (m.init == "0") {
          t.add_zero(a);
        } else {
          throw std::logic_error("unknown ancilla initialization: " + m.init);
        }
      }
    }
    for (unsigned a : sched.ancillas) {
      if (!prepared.at(a)) {
        throw std::logic_error("ancilla never initialized");
      }
    }
  }

  const auto run_round = [&](const std::vector<ScheduledMeasurement>& round,
                             const std::string& label) {
    std::set<unsigned> touched;
    for (const auto& m : round) {
      for (unsigned qb : m.qubits) {
        if (!touched.insert(qb).second) {
          throw std::logic_error("round reuses qubit " + std::to_string(qb));
        }
      }
    }
    for (const auto& m : round) {
      if (m.obs.size() != m.qubits.size()) {
        throw std::logic_error("observable letters do not match its qubits");
      }
      PauliString obs(sched.total_qubits);
      for (std::size_t i = 0; i < m.qubits.size(); ++i) {
        obs.set_letter(m.qubits[i], pauli_from_char(m.obs[i]));
      }
      const MeasurementRecord rec = t.measure_pauli(obs, policy);
      log.push_back(label + ": " + m.obs + "(" + qubit_list(m.qubits) +
                    ") = " + std::to_string(rec.outcome));
    }
  };

  for (std::size_t r = 0; r < sched.rounds.size(); ++r) {
    run_round(sched.rounds[r], "round " + std::to_string(r + 1));
  }
  run_round(sched.final_round, "final");

  // The final projections disentangle every ancilla, so each graph
  // generator X_v prod_{w in N(v)} Z_w now measures deterministically on
  // the full register; its outcome is the prepared sign. Z_v anticommutes
  // with exactly the vertex-v generator, so flipped signs are undone by a
  // Z on each flipped vertex.
  const auto adj = g.adjacency();
  StabilizerTableau reduced(g.n);
  PauliString corrections(g.n);
  for (unsigned v = 0; v < g.n; ++v) {
    PauliString embedded(sched.total_qubits, v, Pauli::X);
    PauliString local(g.n, v, Pauli::X);
    for (unsigned w : adj[v]) {
      embedded.set_letter(w, Pauli::Z);
      local.set_letter(w, Pauli::Z);
    }
    const MeasurementRecord rec = t.measure_pauli(embedded, policy);
    if (!rec.deterministic) {
      throw std::logic_error("schedule left the stabilizer of vertex " +
                             std::to_string(v) + " unpinned");
    }
    if (rec.outcome) {
      local.set_phase_exp(2);
      corrections.set_letter(v, Pauli::Z);
    }
    reduced.add_pair(local, PauliString(g.n, v, Pauli::Z));
    log.push_back("K(" + std::to_string(v) +
                  ") = " + (rec.outcome ? "-1" : "+1"));
  }

  return ScheduleExecution{std::move(reduced), std::move(corrections),
                           std::move(log)};
}

}  // namespace mbqc
