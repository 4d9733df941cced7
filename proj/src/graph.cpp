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

#include "mbqc/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mbqc {

Graph Graph::from_edges(unsigned n,
                        std::vector<std::pair<unsigned, unsigned>> edges) {
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop edge");
    if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

Graph Graph::path(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, std::move(e));
}

Graph Graph::cycle(unsigned n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.edges.emplace_back(0, n - 1);
  return from_edges(n, std::move(g.edges));
}

Graph Graph::star(unsigned leaves) {
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return from_edges(leaves + 1, std::move(e));
}

Graph Graph::complete(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return from_edges(n, std::move(e));
}

Graph Graph::grid(unsigned rows, unsigned cols) {
  std::vector<std::pair<unsigned, unsigned>> e;
  auto idx = [cols](unsigned r, unsigned c) { return r * cols + c; };
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(idx(r, c), idx(r, c + 1));
      if (r + 1 < rows) e.emplace_back(idx(r, c), idx(r + 1, c));
    }
  }
  return from_edges(rows * cols, std::move(e));
}

Graph Graph::random(unsigned n, double edge_prob, uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = a + 1; b < n; ++b) {
      double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      if (u < edge_prob) e.emplace_back(a, b);
    }
  }
  return from_edges(n, std::move(e));
}

Graph Graph::parse(const std::string& text) {
  // JSON if the first non-space byte opens an object; edge list otherwise.
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j = nlohmann::json::parse(text);
    unsigned n = j.at("n").get<unsigned>();
    std::vector<std::pair<unsigned, unsigned>> e;
    for (const auto& edge : j.at("edges")) {
      e.emplace_back(edge.at(0).get<unsigned>(), edge.at(1).get<unsigned>());
    }
    return from_edges(n, std::move(e));
  }
  std::istringstream in(text);
  std::vector<std::pair<unsigned, unsigned>> e;
  unsigned n = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    unsigned a, b;
    if (ls >> a >> b) {
      e.emplace_back(a, b);
      n = std::max({n, a + 1, b + 1});
    }
  }
  if (e.empty()) throw std::invalid_argument("no edges in graph input");
  return from_edges(n, std::move(e));
}

std::string Graph::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edges) j["edges"].push_back({a, b});
  return j.dump();
}

std::vector<std::vector<unsigned>> Graph::adjacency() const {
  std::vector<std::vector<unsigned>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

unsigned Graph::max_degree() const {
  unsigned best = 0;
  for (const auto& nb : adjacency()) {
    best = std::max(best, static_cast<unsigned>(nb.size()));
  }
  return best;
}

bool Graph::has_edge(unsigned a, unsigned b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

}  // namespace mbqc
