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
#include <utility>
#include <vector>

namespace mbqc {

// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
// (a < b), sorted, and deduplicated.
struct Graph {
  unsigned n = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;

  static Graph from_edges(unsigned n,
                          std::vector<std::pair<unsigned, unsigned>> edges);
  static Graph path(unsigned n);
  static Graph cycle(unsigned n);
  static Graph star(unsigned leaves);
  static Graph complete(unsigned n);
  static Graph grid(unsigned rows, unsigned cols);

  // Erdos-Renyi-style graph, deterministic in the seed.
  static Graph random(unsigned n, double edge_prob, uint64_t seed);

  // Accepts either the JSON form {"n": ..., "edges": [[a, b], ...]} or a
  // plain edge list, one "a b" pair per line (n inferred).
  static Graph parse(const std::string& text);

  std::string to_json() const;

  std::vector<std::vector<unsigned>> adjacency() const;
  unsigned max_degree() const;
  bool has_edge(unsigned a, unsigned b) const;
};

}  // namespace mbqc
