#include <doctest.h>

#include <algorithm>

#include "defcol/embedding.hpp"
#include "defcol/errors.hpp"
#include "defcol/lemmas.hpp"
#include "support.hpp"

using namespace defcol;
using namespace defcol::testing;

namespace {

bool has_vertex_witness(const LemmaReport& r, VertexId v) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const LemmaWitness& w) {
    return w.kind == LemmaWitness::Kind::Vertex && w.element == v;
  });
}

}  // namespace

TEST_SUITE("lemmas") {

TEST_CASE("lemma 2.1 thresholds are exact") {
  // 2-vertex joined to a 4-vertex and a 6-vertex: holds at (2,4)
  std::vector<Edge> edges{{0, 1}, {0, 2}};
  for (int leaf = 3; leaf < 6; ++leaf) edges.emplace_back(1, leaf);      // deg(1)=4
  for (int leaf = 6; leaf < 11; ++leaf) edges.emplace_back(2, leaf);     // deg(2)=6
  Graph ok = build_graph(11, edges);
  LemmaReport r = check_lemma_2_1(ok, 2, 4);
  CHECK(!has_vertex_witness(r, 0));

  // two 4-vertices only: the (d2+2)+ requirement fails
  std::vector<Edge> edges2{{0, 1}, {0, 2}};
  for (int leaf = 3; leaf < 6; ++leaf) edges2.emplace_back(1, leaf);
  for (int leaf = 6; leaf < 9; ++leaf) edges2.emplace_back(2, leaf);
  Graph bad = build_graph(9, edges2);
  LemmaReport r2 = check_lemma_2_1(bad, 2, 4);
  CHECK(has_vertex_witness(r2, 0));

  // C5: every vertex fails
  LemmaReport c5 = check_lemma_2_1(make_cycle(5), 2, 4);
  CHECK(!c5.holds);
  CHECK(c5.witnesses.size() == 5);

  CHECK_THROWS_AS(check_lemma_2_1(make_cycle(5), 4, 2), std::invalid_argument);
}

TEST_CASE("lemma 2.2 parts (i) and (ii)") {
  LemmaReport dodeca = check_lemma_2_2(make_dodecahedron());
  CHECK(!dodeca.holds);
  CHECK(dodeca.witnesses.size() == 20);
  CHECK(dodeca.witnesses[0].reason.find("(i)") == 0);

  // 4-vertex with four 5-neighbors: part (ii) fails
  std::vector<Edge> edges;
  for (int nb = 1; nb <= 4; ++nb) {
    edges.emplace_back(0, nb);
    for (int leaf = 0; leaf < 4; ++leaf) edges.emplace_back(nb, 5 + 4 * (nb - 1) + leaf);
  }
  Graph fives = build_graph(21, edges);
  REQUIRE(fives.degree(1) == 5);
  LemmaReport r = check_lemma_2_2(fives);
  CHECK(has_vertex_witness(r, 0));

  // raise one neighbor to degree 6: part (ii) holds for the center
  edges.emplace_back(1, 21);
  Graph six = build_graph(22, edges);
  REQUIRE(six.degree(1) == 6);
  LemmaReport r2 = check_lemma_2_2(six);
  CHECK(!has_vertex_witness(r2, 0));
}

TEST_CASE("lemma 2.2(i) matches lemma 2.1 at (2,4)") {
  for (const Graph& g : {make_cycle(5), make_dodecahedron(), make_theta_2_3_5(),
                         make_spider_4x2(), make_double_subdivided_k4()}) {
    LemmaReport l21 = check_lemma_2_1(g, 2, 4);
    LemmaReport l22 = check_lemma_2_2(g);
    for (VertexId v = 0; v < g.n; ++v) {
      if (g.degree(v) > 3) continue;
      CHECK(has_vertex_witness(l21, v) == has_vertex_witness(l22, v));
    }
  }
}

TEST_CASE("lemma 2.3 face structure") {
  // C5: both faces are 5-faces, every 2-vertex sits on two of them
  LemmaReport c5 = check_lemma_2_3(embed_cycle(5));
  CHECK(!c5.holds);
  int part3 = 0;
  for (const auto& w : c5.witnesses) part3 += w.reason.find("(iii)") == 0;
  CHECK(part3 == 5);

  // C6 embeds with two 6-faces: part (ii)
  LemmaReport c6 = check_lemma_2_3(embed_cycle(6));
  CHECK(!c6.holds);
  CHECK(std::any_of(c6.witnesses.begin(), c6.witnesses.end(),
                    [](const LemmaWitness& w) { return w.reason.find("(ii)") == 0; }));

  // dodecahedron: no 2-vertices, cycles everywhere; the lemma holds
  CHECK(check_lemma_2_3(make_embedded_dodecahedron()).holds);

  // tree: the single face walk repeats its cut vertex; part (i) when short
  Graph p3 = make_path(3);
  LemmaReport tree = check_lemma_2_3(EmbeddedGraph::make(p3, {{1}, {0, 2}, {1}}));
  CHECK(std::any_of(tree.witnesses.begin(), tree.witnesses.end(),
                    [](const LemmaWitness& w) { return w.reason.find("(i)") == 0; }));
}

TEST_CASE("lemma 2.4 incidence inequalities") {
  // C5 faces: N2=5 > floor(5/2)
  LemmaReport c5 = check_lemma_2_4(embed_cycle(5));
  CHECK(!c5.holds);
  CHECK(c5.witnesses.size() == 2);
  CHECK(c5.witnesses[0].reason.find("(i)") == 0);

  // dodecahedron: N2=0, N3=5 > k-2*0-1=4 on every 5-face
  LemmaReport dodeca = check_lemma_2_4(make_embedded_dodecahedron());
  CHECK(!dodeca.holds);
  CHECK(dodeca.witnesses.size() == 12);
  CHECK(dodeca.witnesses[0].reason.find("(ii)") == 0);

  // theta(2,3,5): faces of degree 5,7,8 with 2-vertex majorities
  LemmaReport theta = check_lemma_2_4(*find_embedding(make_theta_2_3_5()));
  CHECK(!theta.holds);
}

TEST_CASE("scan_all requires family membership") {
  CHECK_THROWS_AS(scan_all(embed_cycle(6)), Error);
  try {
    scan_all(embed_cycle(6));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInFamily);
  }
}

TEST_CASE("scan_all flags every family instance somewhere") {
  for (const EmbeddedGraph& eg :
       {embed_cycle(5), embed_cycle(7), make_embedded_dodecahedron(),
        *find_embedding(make_theta_2_3_5()), *find_embedding(make_spider_4x2()),
        *find_embedding(make_double_subdivided_k4())}) {
    auto reports = scan_all(eg);
    REQUIRE(reports.size() == 5);
    bool any_violated = std::any_of(reports.begin(), reports.end(),
                                    [](const LemmaReport& r) { return !r.holds; });
    CHECK(any_violated);
    for (const auto& r : reports) CHECK(r.holds == r.witnesses.empty());
  }
}

TEST_CASE("C5 hits lemma 2.2(i), 2.3(iii) and 2.4(i) at once") {
  auto reports = scan_all(embed_cycle(5));
  auto by_name = [&](const std::string& name) -> const LemmaReport& {
    for (const auto& r : reports) {
      if (r.lemma == name) return r;
    }
    FAIL("missing report");
    return reports.front();
  };
  CHECK(!by_name("lemma_2_2").holds);
  CHECK(!by_name("lemma_2_3").holds);
  CHECK(!by_name("lemma_2_4").holds);
  CHECK(by_name("min_degree").holds);
}

}  // TEST_SUITE
