#include "defcol/embedded.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "defcol/errors.hpp"

namespace defcol {

namespace {

// rotation[v] must list each neighbor of v exactly once.
void validate_rotation(const Graph& g, const std::vector<std::vector<VertexId>>& rotation) {
  if (static_cast<int>(rotation.size()) != g.n) {
    throw Error(Errc::InvalidRotation, "rotation has " + std::to_string(rotation.size()) +
                                           " entries for " + std::to_string(g.n) + " vertices");
  }
  for (VertexId v = 0; v < g.n; ++v) {
    std::vector<VertexId> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.adj[v]) {
      throw Error(Errc::InvalidRotation,
                  "rotation at vertex " + std::to_string(v) +
                      " is not a permutation of its neighbors");
    }
  }
}

}  // namespace

std::vector<Face> trace_faces(const Graph& g,
                              const std::vector<std::vector<VertexId>>& rotation) {
  validate_rotation(g, rotation);

  // Index of u within rotation[v], for successor lookups.
  std::vector<std::map<VertexId, int>> pos(g.n);
  for (VertexId v = 0; v < g.n; ++v) {
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) {
      pos[v][rotation[v][i]] = i;
    }
  }

  // Directed edge (v, rotation[v][i]) gets index offset[v] + i.
  std::vector<int> offset(g.n + 1, 0);
  for (VertexId v = 0; v < g.n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  std::vector<char> used(offset[g.n], 0);
  auto edge_index = [&](VertexId from, VertexId to) { return offset[from] + pos[from].at(to); };

  std::vector<Face> faces;
  // Start traces from unused directed edges in lexicographic (u,v) order;
  // adjacency lists are sorted, so this fixes face ids and walk phases.
  for (VertexId u = 0; u < g.n; ++u) {
    for (VertexId v : g.adj[u]) {
      if (used[edge_index(u, v)]) continue;
      Face face;
      face.id = static_cast<int>(faces.size());
      VertexId a = u;
      VertexId b = v;
      do {
        used[edge_index(a, b)] = 1;
        face.boundary_walk.push_back(a);
        const auto& rot = rotation[b];
        int i = pos[b].at(a);
        VertexId c = rot[(i + 1) % rot.size()];
        a = b;
        b = c;
      } while (!(a == u && b == v));
      faces.push_back(std::move(face));
    }
  }

  // An isolated vertex on the sphere still bounds one face.
  if (g.n == 1 && g.edge_count() == 0) {
    faces.push_back(Face{0, {}});
  }
  return faces;
}

EmbeddedGraph EmbeddedGraph::make(Graph g, std::vector<std::vector<VertexId>> rotation) {
  EmbeddedGraph eg;
  eg.faces = trace_faces(g, rotation);
  eg.graph = std::move(g);
  eg.rotation = std::move(rotation);
  eg.vertex_faces_.assign(eg.graph.n, {});
  for (const Face& f : eg.faces) {
    for (VertexId v : f.boundary_walk) eg.vertex_faces_[v].push_back(f.id);
  }
  return eg;
}

int incidence_count(const EmbeddedGraph& eg, const Face& f, int t) {
  int count = 0;
  for (VertexId v : f.boundary_walk) {
    if (eg.graph.degree(v) == t) ++count;
  }
  return count;
}

bool euler_check(const EmbeddedGraph& eg) {
  if (!eg.graph.connected()) throw Error(Errc::DisconnectedInput, "euler_check needs a connected graph");
  return eg.vertex_count() - eg.edge_count() + eg.face_count() == 2;
}

}  // namespace defcol
