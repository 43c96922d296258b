#include <doctest.h>

#include <numeric>

#include "defcol/embedded.hpp"
#include "defcol/errors.hpp"
#include "defcol/graph.hpp"
#include "defcol/rational.hpp"
#include "support.hpp"

using namespace defcol;
using namespace defcol::testing;

TEST_SUITE("graph") {

TEST_CASE("build_graph basics") {
  Graph c5 = make_cycle(5);
  CHECK(c5.n == 5);
  CHECK(c5.edge_count() == 5);
  for (VertexId v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  Graph k4 = make_complete(4);
  CHECK(k4.edge_count() == 6);
  for (VertexId v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

  Graph dup = build_graph(2, {{0, 1}, {0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.degree(0) == 1);
  CHECK(dup.degree(1) == 1);
}

TEST_CASE("build_graph contract violations") {
  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{-1, 0}}), Error);
}

TEST_CASE("remove_vertex keeps canonical ids") {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Graph h = remove_vertex(g, 1);  // path 0-?-? after relabeling
  CHECK(h.n == 3);
  CHECK(h.edge_count() == 2);
  CHECK(h.has_edge(1, 2));  // old 2-3
  CHECK(h.has_edge(0, 2));  // old 0-3
}

TEST_CASE("trace_faces on C5") {
  EmbeddedGraph eg = embed_cycle(5);
  REQUIRE(eg.face_count() == 2);
  CHECK(eg.faces[0].degree() == 5);
  CHECK(eg.faces[1].degree() == 5);
  CHECK(euler_check(eg));
}

TEST_CASE("trace_faces on the dodecahedron") {
  EmbeddedGraph eg = make_embedded_dodecahedron();
  REQUIRE(eg.face_count() == 12);
  for (const Face& f : eg.faces) CHECK(f.degree() == 5);
  CHECK(eg.vertex_count() - eg.edge_count() + eg.face_count() == 2);
  CHECK(euler_check(eg));
}

TEST_CASE("trace_faces doubles tree edges") {
  Graph p3 = make_path(3);
  std::vector<std::vector<VertexId>> rotation{{1}, {0, 2}, {1}};
  auto faces = trace_faces(p3, rotation);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].degree() == 4);
  int middle = 0;
  for (VertexId v : faces[0].boundary_walk) middle += v == 1;
  CHECK(middle == 2);
}

TEST_CASE("trace_faces rejects bad rotations") {
  Graph c5 = make_cycle(5);
  std::vector<std::vector<VertexId>> missing{{1}, {0, 2}, {1, 3}, {2, 4}, {3, 0}};
  CHECK_THROWS_AS(trace_faces(c5, missing), Error);
  std::vector<std::vector<VertexId>> duplicated{
      {1, 4, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 0}};
  CHECK_THROWS_AS(trace_faces(c5, duplicated), Error);
}

TEST_CASE("incidence counts use walk multiplicity") {
  EmbeddedGraph c5 = embed_cycle(5);
  CHECK(incidence_count(c5, c5.faces[0], 2) == 5);

  EmbeddedGraph dodeca = make_embedded_dodecahedron();
  CHECK(incidence_count(dodeca, dodeca.faces[0], 3) == 5);

  Graph p3 = make_path(3);
  EmbeddedGraph ep3 = EmbeddedGraph::make(p3, {{1}, {0, 2}, {1}});
  CHECK(incidence_count(ep3, ep3.faces[0], 2) == 2);  // middle vertex twice
  CHECK(incidence_count(ep3, ep3.faces[0], 1) == 2);
}

TEST_CASE("euler_check flags disconnected input") {
  Graph two = build_graph(2, {});
  CHECK_THROWS_AS(euler_check(EmbeddedGraph::make(two, {{}, {}})), Error);
}

TEST_CASE("degree sums match both handshake identities") {
  for (const EmbeddedGraph& eg : {embed_cycle(5), embed_cycle(7), make_embedded_dodecahedron()}) {
    int vertex_sum = 0;
    for (VertexId v = 0; v < eg.graph.n; ++v) vertex_sum += eg.graph.degree(v);
    int face_sum = 0;
    for (const Face& f : eg.faces) face_sum += f.degree();
    CHECK(vertex_sum == 2 * eg.edge_count());
    CHECK(face_sum == 2 * eg.edge_count());

    Rational total;
    for (VertexId v = 0; v < eg.graph.n; ++v) total += Rational(eg.graph.degree(v) - 4);
    for (const Face& f : eg.faces) total += Rational(f.degree() - 4);
    CHECK(total == Rational(-8));
  }
}

TEST_CASE("face tracing is deterministic") {
  EmbeddedGraph a = make_embedded_dodecahedron();
  EmbeddedGraph b = make_embedded_dodecahedron();
  REQUIRE(a.face_count() == b.face_count());
  for (int i = 0; i < a.face_count(); ++i) {
    CHECK(a.faces[i].boundary_walk == b.faces[i].boundary_walk);
  }
}

TEST_CASE("edge list round trip") {
  Graph g = make_theta_2_3_5();
  EdgeListFile parsed = parse_edge_list(serialize_edge_list(g));
  CHECK(parsed.graph.adj == g.adj);
  CHECK(!parsed.rotation);

  EdgeListFile with_rot = parse_edge_list("3 2\n0 1\n1 2\nrot 1: 2 0\n");
  REQUIRE(with_rot.rotation);
  CHECK((*with_rot.rotation)[1] == std::vector<VertexId>{2, 0});

  CHECK_THROWS_AS(parse_edge_list("2 1\n"), Error);
  CHECK_THROWS_AS(parse_edge_list(""), Error);
}

}  // TEST_SUITE
