#pragma once

#include <vector>

#include "defcol/graph.hpp"

namespace defcol {

using FaceId = int;

// One face of a combinatorial embedding. The boundary walk is the cyclic
// vertex sequence of the directed-edge traversal; its length is the face
// degree. A cut vertex may appear more than once.
struct Face {
  FaceId id = 0;
  std::vector<VertexId> boundary_walk;

  int degree() const { return static_cast<int>(boundary_walk.size()); }
};

// Immutable after construction; shares nothing mutable, safe to read from
// parallel workers.
struct EmbeddedGraph {
  Graph graph;
  std::vector<std::vector<VertexId>> rotation;  // cyclic neighbor order per vertex
  std::vector<Face> faces;

  int vertex_count() const { return graph.n; }
  int edge_count() const { return graph.edge_count(); }
  int face_count() const { return static_cast<int>(faces.size()); }

  // Face ids incident to v, one entry per corner (multiplicity d(v)).
  const std::vector<FaceId>& faces_at(VertexId v) const { return vertex_faces_[v]; }

  static EmbeddedGraph make(Graph g, std::vector<std::vector<VertexId>> rotation);

 private:
  std::vector<std::vector<FaceId>> vertex_faces_;
};

// Traces every directed edge exactly once, faces enumerated from their
// smallest directed edge. Throws Error(InvalidRotation) when some rotation
// list is not a permutation of the vertex's neighbors.
std::vector<Face> trace_faces(const Graph& g, const std::vector<std::vector<VertexId>>& rotation);

// Occurrences of degree-t vertices on the boundary walk, with multiplicity.
int incidence_count(const EmbeddedGraph& eg, const Face& f, int t);

// True iff V - E + F = 2. Throws Error(DisconnectedInput).
bool euler_check(const EmbeddedGraph& eg);

}  // namespace defcol
