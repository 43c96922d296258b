#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace defcol {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph on vertex ids 0..n-1 with sorted adjacency lists.
struct Graph {
  int n = 0;
  std::vector<std::vector<VertexId>> adj;

  int degree(VertexId v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const;
  bool has_edge(VertexId u, VertexId v) const;
  bool connected() const;
};

// Deduplicates edges and symmetrizes adjacency. Throws Error on loops or
// out-of-range endpoints.
Graph build_graph(int n, const std::vector<Edge>& edges);

// Graph with v removed; remaining ids shift down to stay canonical 0..n-2.
Graph remove_vertex(const Graph& g, VertexId v);

std::vector<Edge> edge_list(const Graph& g);

// Edge-list text format: "n m" header, then m lines "u v" (0-based), then
// optional rotation lines "rot v: a b c ...".
struct EdgeListFile {
  Graph graph;
  std::optional<std::vector<std::vector<VertexId>>> rotation;
};

EdgeListFile parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

}  // namespace defcol
