#pragma once

#include <array>
#include <numeric>
#include <vector>

#include "defcol/embedded.hpp"
#include "defcol/graph.hpp"

namespace defcol::testing {

inline Graph make_cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

inline Graph make_complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

inline Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

inline Graph make_star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return build_graph(leaves + 1, edges);
}

inline Graph make_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);      // outer C5
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);            // spokes
  }
  return build_graph(10, edges);
}

// Two branch vertices joined by internally disjoint paths of 2, 3 and 5
// edges; cycle lengths are 5, 7 and 8, so the graph sits in the family.
inline Graph make_theta_2_3_5() {
  return build_graph(9, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1},
                         {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1}});
}

// K4 with every edge subdivided twice: girth 9, 3-regular branch vertices.
inline Graph make_double_subdivided_k4() {
  std::vector<Edge> edges;
  int next = 4;
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) {
    int a = next++;
    int b = next++;
    edges.emplace_back(u, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, v);
  }
  return build_graph(next, edges);
}

// Degree-4 center with four length-2 legs: a tree whose center is a Lemma
// 2.2(ii) configuration (4-vertex, all neighbors 5-).
inline Graph make_spider_4x2() {
  std::vector<Edge> edges;
  for (int leg = 0; leg < 4; ++leg) {
    edges.emplace_back(0, 1 + 2 * leg);
    edges.emplace_back(1 + 2 * leg, 2 + 2 * leg);
  }
  return build_graph(9, edges);
}

inline const std::vector<std::vector<VertexId>>& dodecahedron_rotation() {
  static const std::vector<std::vector<VertexId>> rotation = {
      {1, 10, 19}, {0, 2, 8},   {1, 3, 6},   {2, 19, 4},  {3, 17, 5},
      {4, 15, 6},  {5, 7, 2},   {6, 14, 8},  {7, 9, 1},   {8, 13, 10},
      {9, 11, 0},  {10, 12, 18}, {11, 13, 16}, {12, 9, 14}, {13, 7, 15},
      {14, 5, 16}, {15, 17, 12}, {16, 4, 18}, {17, 19, 11}, {18, 3, 0},
  };
  return rotation;
}

inline Graph make_dodecahedron() {
  std::vector<Edge> edges;
  const auto& rotation = dodecahedron_rotation();
  for (VertexId v = 0; v < static_cast<int>(rotation.size()); ++v) {
    for (VertexId u : rotation[v]) {
      if (v < u) edges.emplace_back(v, u);
    }
  }
  return build_graph(20, edges);
}

inline EmbeddedGraph make_embedded_dodecahedron() {
  return EmbeddedGraph::make(make_dodecahedron(), dodecahedron_rotation());
}

inline EmbeddedGraph embed_cycle(int n) {
  Graph g = make_cycle(n);
  std::vector<std::vector<VertexId>> rotation(n);
  for (int i = 0; i < n; ++i) rotation[i] = g.adj[i];
  return EmbeddedGraph::make(g, rotation);
}

// Pentagon 0..4 with leaf_count[i] pendants on corner i; the rotation pins
// the pendants to the outer face so the pentagon survives as a 5-face.
inline EmbeddedGraph make_pentagon_with_leaves(const std::array<int, 5>& leaf_count) {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  int next = 5;
  std::vector<std::vector<VertexId>> leaves(5);
  for (int i = 0; i < 5; ++i) {
    for (int l = 0; l < leaf_count[i]; ++l) {
      edges.emplace_back(i, next);
      leaves[i].push_back(next++);
    }
  }
  std::vector<std::vector<VertexId>> rotation(next);
  for (int i = 0; i < 5; ++i) {
    rotation[i] = {(i + 4) % 5, (i + 1) % 5};
    rotation[i].insert(rotation[i].end(), leaves[i].begin(), leaves[i].end());
    for (VertexId leaf : leaves[i]) rotation[leaf] = {i};
  }
  return EmbeddedGraph::make(build_graph(next, edges), rotation);
}

// Two pentagons sharing the path 0-1-2, with pendant paths keeping each
// pentagon at exactly two 2-vertex incidences; vertex 1 sits in both and is
// the canonical R6 pairing conflict.
inline EmbeddedGraph make_r6_conflict_gadget() {
  Graph g = build_graph(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                             {2, 5}, {5, 6}, {6, 0},
                             {3, 7}, {7, 8}, {5, 9}, {9, 10}});
  std::vector<std::vector<VertexId>> rotation{
      {6, 1, 4}, {0, 2}, {1, 5, 3}, {4, 2, 7}, {0, 3}, {6, 9, 2},
      {5, 0},    {3, 8}, {7},       {5, 10},   {9}};
  return EmbeddedGraph::make(g, rotation);
}

}  // namespace defcol::testing
