#include "defcol/lemmas.hpp"

#include <algorithm>
#include <stdexcept>

#include "defcol/errors.hpp"
#include "defcol/family.hpp"

namespace defcol {

namespace {

LemmaWitness vertex_witness(VertexId v, std::string reason) {
  return {LemmaWitness::Kind::Vertex, v, std::move(reason)};
}

LemmaWitness face_witness(FaceId f, std::string reason) {
  return {LemmaWitness::Kind::Face, f, std::move(reason)};
}

void finish(LemmaReport& report) { report.holds = report.witnesses.empty(); }

}  // namespace

LemmaReport check_lemma_2_1(const Graph& g, int d1, int d2) {
  if (d1 > d2) throw std::invalid_argument("check_lemma_2_1 needs d1 <= d2");
  const int lo = d1 + 2;
  const int hi = d2 + 2;
  LemmaReport report{"lemma_2_1", true, {}};
  for (VertexId v = 0; v < g.n; ++v) {
    if (g.degree(v) > 3) continue;
    int at_least_lo = 0;
    int at_least_hi = 0;
    for (VertexId u : g.adj[v]) {
      if (g.degree(u) >= lo) ++at_least_lo;
      if (g.degree(u) >= hi) ++at_least_hi;
    }
    if (at_least_lo < 2 || at_least_hi < 1) {
      report.witnesses.push_back(vertex_witness(
          v, "has " + std::to_string(at_least_lo) + " " + std::to_string(lo) +
                 "+-neighbors and " + std::to_string(at_least_hi) + " " + std::to_string(hi) +
                 "+-neighbors"));
    }
  }
  finish(report);
  return report;
}

LemmaReport check_lemma_2_2(const Graph& g) {
  LemmaReport report{"lemma_2_2", true, {}};
  for (VertexId v = 0; v < g.n; ++v) {
    int deg = g.degree(v);
    if (deg <= 3) {
      int four_plus = 0;
      int six_plus = 0;
      for (VertexId u : g.adj[v]) {
        if (g.degree(u) >= 4) ++four_plus;
        if (g.degree(u) >= 6) ++six_plus;
      }
      if (four_plus < 2 || six_plus < 1) {
        report.witnesses.push_back(vertex_witness(
            v, "(i) has " + std::to_string(four_plus) + " 4+-neighbors and " +
                   std::to_string(six_plus) + " 6+-neighbors"));
      }
    } else if (deg == 4) {
      bool has_six_plus = std::any_of(g.adj[v].begin(), g.adj[v].end(),
                                      [&](VertexId u) { return g.degree(u) >= 6; });
      if (!has_six_plus) {
        report.witnesses.push_back(vertex_witness(v, "(ii) no 6+-neighbor"));
      }
    }
  }
  finish(report);
  return report;
}

LemmaReport check_lemma_2_3(const EmbeddedGraph& eg) {
  LemmaReport report{"lemma_2_3", true, {}};
  const Graph& g = eg.graph;

  for (const Face& f : eg.faces) {
    int k = f.degree();
    if (k >= 3 && k <= 9) {
      std::vector<VertexId> sorted = f.boundary_walk;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) {
        report.witnesses.push_back(face_witness(
            f.id, "(i) boundary walk repeats vertex " + std::to_string(*dup)));
      }
    }
    if (k == 3 || k == 4 || k == 6) {
      report.witnesses.push_back(
          face_witness(f.id, "(ii) " + std::to_string(k) + "-face present"));
    }
  }

  for (VertexId v = 0; v < g.n; ++v) {
    if (g.degree(v) != 2) continue;
    int five_face_incidences = 0;
    for (FaceId fid : eg.faces_at(v)) {
      if (eg.faces[fid].degree() == 5) ++five_face_incidences;
    }
    if (five_face_incidences >= 2) {
      report.witnesses.push_back(vertex_witness(
          v, "(iii) 2-vertex with " + std::to_string(five_face_incidences) +
                 " 5-face incidences"));
    }
  }
  finish(report);
  return report;
}

LemmaReport check_lemma_2_4(const EmbeddedGraph& eg) {
  LemmaReport report{"lemma_2_4", true, {}};
  for (const Face& f : eg.faces) {
    int k = f.degree();
    int n2 = incidence_count(eg, f, 2);
    int n3 = incidence_count(eg, f, 3);
    int half = k / 2;
    if (n2 > half) {
      report.witnesses.push_back(face_witness(
          f.id, "(i) N2=" + std::to_string(n2) + " > " + std::to_string(half)));
    } else if (n2 < half && n3 > k - 2 * n2 - 1) {
      report.witnesses.push_back(face_witness(
          f.id, "(ii) N3=" + std::to_string(n3) + " > " + std::to_string(k - 2 * n2 - 1)));
    } else if (n2 == half && n3 != 0) {
      report.witnesses.push_back(
          face_witness(f.id, "(iii) N2=" + std::to_string(n2) + " forces N3=0, got N3=" +
                                 std::to_string(n3)));
    }
  }
  finish(report);
  return report;
}

LemmaReport check_min_degree(const Graph& g) {
  LemmaReport report{"min_degree", true, {}};
  for (VertexId v = 0; v < g.n; ++v) {
    if (g.degree(v) < 2) {
      report.witnesses.push_back(
          vertex_witness(v, "degree " + std::to_string(g.degree(v)) + " < 2"));
    }
  }
  finish(report);
  return report;
}

std::vector<LemmaReport> scan_all(const EmbeddedGraph& eg) {
  FamilyVerdict verdict = is_in_family(eg.graph);
  if (!verdict) {
    throw Error(Errc::NotInFamily, family_reason_name(verdict.reason));
  }
  return {
      check_min_degree(eg.graph),  check_lemma_2_1(eg.graph, 2, 4), check_lemma_2_2(eg.graph),
      check_lemma_2_3(eg),         check_lemma_2_4(eg),
  };
}

}  // namespace defcol
