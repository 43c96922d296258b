#include "defcol/graph.hpp"

#include <algorithm>
#include <sstream>

#include "defcol/errors.hpp"

namespace defcol {

int Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adj) twice += nbrs.size();
  return static_cast<int>(twice / 2);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

bool Graph::connected() const {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(Errc::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                      std::to_string(n));
    }
    if (u == v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nbrs : g.adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

Graph remove_vertex(const Graph& g, VertexId v) {
  if (v < 0 || v >= g.n) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  std::vector<Edge> edges;
  for (VertexId u = 0; u < g.n; ++u) {
    if (u == v) continue;
    for (VertexId w : g.adj[u]) {
      if (w == v || w < u) continue;
      auto shift = [v](VertexId x) { return x > v ? x - 1 : x; };
      edges.emplace_back(shift(u), shift(w));
    }
  }
  return build_graph(g.n - 1, edges);
}

std::vector<Edge> edge_list(const Graph& g) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < g.n; ++u) {
    for (VertexId v : g.adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

EdgeListFile parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  auto fail = [&](const std::string& msg) -> void {
    throw Error(Errc::BadHeader, "edge list line " + std::to_string(lineno) + ": " + msg);
  };

  if (!next_line()) fail("empty input");
  std::istringstream header(line);
  int n = 0;
  int m = 0;
  if (!(header >> n >> m) || n < 0 || m < 0) fail("expected \"n m\"");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_line()) fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream es(line);
    int u = 0;
    int v = 0;
    if (!(es >> u >> v)) fail("expected \"u v\"");
    edges.emplace_back(u, v);
  }

  EdgeListFile result;
  result.graph = build_graph(n, edges);

  std::vector<std::vector<VertexId>> rotation(n);
  bool has_rotation = false;
  while (next_line()) {
    std::istringstream rs(line);
    std::string kw;
    int v = 0;
    char colon = 0;
    if (!(rs >> kw) || kw != "rot" || !(rs >> v) || !(rs >> colon) || colon != ':') {
      fail("expected \"rot v: a b c ...\"");
    }
    if (v < 0 || v >= n) fail("rotation vertex out of range");
    has_rotation = true;
    int u = 0;
    while (rs >> u) rotation[v].push_back(u);
  }
  if (has_rotation) result.rotation = std::move(rotation);
  return result;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = edge_list(g);
  out << g.n << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace defcol
