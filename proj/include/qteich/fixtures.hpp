#pragma once

#include <string>
#include <vector>

#include "qteich/fatgraph.hpp"
#include "qteich/rng.hpp"

namespace qteich {

// Three-holed sphere: two vertices with opposite cyclic orders.
inline FatGraph make_pants() {
  return FatGraph::from_spec(
      {{"u", {"u1", "u2", "u3"}}, {"w", {"w3", "w2", "w1"}}},
      {{"u1", "w1"}, {"u2", "w2"}, {"u3", "w3"}}, {"e1", "e2", "e3"});
}

// One-holed torus: two vertices with parallel cyclic orders (single face).
inline FatGraph make_torus1() {
  return FatGraph::from_spec(
      {{"u", {"u1", "u2", "u3"}}, {"w", {"w1", "w2", "w3"}}},
      {{"u1", "w1"}, {"u2", "w2"}, {"u3", "w3"}}, {"e1", "e2", "e3"});
}

// Four-holed sphere: the planar tetrahedron graph with rotations induced by
// a planar embedding (vertex 1 inside triangle 2,3,4).
inline FatGraph make_k4() {
  return FatGraph::from_spec(
      {
          {"v1", {"a1", "b1", "c1"}},
          {"v2", {"d2", "a2", "f2"}},
          {"v3", {"e3", "b3", "d3"}},
          {"v4", {"f4", "c4", "e4"}},
      },
      {{"a1", "a2"}, {"b1", "b3"}, {"c1", "c4"}, {"d2", "d3"}, {"e3", "e4"}, {"f2", "f4"}},
      {"a", "b", "c", "d", "e", "f"});
}

// Genus-2 surface with one hole: 6 vertices, 9 edges, single face.
inline FatGraph make_genus2() {
  return FatGraph::from_spec(
      {
          {"v0", {"h3", "h11", "h0"}},
          {"v1", {"h2", "h12", "h14"}},
          {"v2", {"h4", "h6", "h17"}},
          {"v3", {"h1", "h9", "h15"}},
          {"v4", {"h5", "h16", "h10"}},
          {"v5", {"h8", "h7", "h13"}},
      },
      {{"h4", "h13"},
       {"h11", "h6"},
       {"h0", "h15"},
       {"h5", "h8"},
       {"h12", "h17"},
       {"h9", "h7"},
       {"h3", "h2"},
       {"h1", "h16"},
       {"h14", "h10"}},
      {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"});
}

// Random connected three-valent fat graph with `edges` edges (edges must be
// a multiple of 3). Cyclic orders and the pairing are drawn from the seed;
// retries until the graph is connected.
inline FatGraph random_three_valent(Rng& rng, int edges) {
  const int H = 2 * edges;
  if (H % 3 != 0) throw graph_error("random_three_valent: edge count must be divisible by 3");
  const int V = H / 3;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> perm(H);
    for (int i = 0; i < H; ++i) perm[i] = i;
    for (int i = H - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);

    std::vector<std::pair<std::string, std::vector<std::string>>> cycles;
    std::vector<std::string> names(H);
    for (int i = 0; i < H; ++i) names[i] = "h" + std::to_string(i);
    int pos = 0;
    for (int v = 0; v < V; ++v) {
      cycles.push_back({"v" + std::to_string(v),
                        {names[perm[pos]], names[perm[pos + 1]], names[perm[pos + 2]]}});
      pos += 3;
    }
    std::vector<int> perm2(H);
    for (int i = 0; i < H; ++i) perm2[i] = i;
    for (int i = H - 1; i > 0; --i) std::swap(perm2[i], perm2[rng.below(i + 1)]);
    std::vector<std::pair<std::string, std::string>> pairing;
    std::vector<std::string> labels;
    for (int e = 0; e < edges; ++e) {
      pairing.push_back({names[perm2[2 * e]], names[perm2[2 * e + 1]]});
      labels.push_back("e" + std::to_string(e));
    }
    FatGraph g = FatGraph::from_spec(cycles, pairing, labels);
    if (g.is_connected()) return g;
  }
  throw graph_error("random_three_valent: no connected sample found");
}

}  // namespace qteich
