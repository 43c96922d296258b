#include "defcol/discharging.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace defcol {

namespace {

const Rational kNinth(1, 9);
const Rational kSixth(1, 6);
const Rational kFifth(1, 5);
const Rational kThird(1, 3);
const Rational kTwoFifths(2, 5);
const Rational kFiveNinths(5, 9);
const Rational kHalf(1, 2);
const Rational kTwoNinths(2, 9);

int count_neighbors_with_degree_at_least(const Graph& g, VertexId v, int bound) {
  int count = 0;
  for (VertexId u : g.adj[v]) {
    if (g.degree(u) >= bound) ++count;
  }
  return count;
}

}  // namespace

ElementRef vertex_ref(VertexId v) { return {ElementRef::Kind::Vertex, v}; }
ElementRef face_ref(FaceId f) { return {ElementRef::Kind::Face, f}; }

std::string element_name(const ElementRef& e) {
  return (e.kind == ElementRef::Kind::Vertex ? "v" : "f") + std::to_string(e.id);
}

Rational& ChargeMap::at(const ElementRef& e) {
  return e.kind == ElementRef::Kind::Vertex ? vertex_charge[e.id] : face_charge[e.id];
}

const Rational& ChargeMap::at(const ElementRef& e) const {
  return e.kind == ElementRef::Kind::Vertex ? vertex_charge[e.id] : face_charge[e.id];
}

Rational ChargeMap::total() const {
  Rational sum;
  for (const Rational& r : vertex_charge) sum += r;
  for (const Rational& r : face_charge) sum += r;
  return sum;
}

ChargeMap initial_charges(const EmbeddedGraph& eg) {
  ChargeMap cm;
  cm.vertex_charge.reserve(eg.graph.n);
  for (VertexId v = 0; v < eg.graph.n; ++v) {
    cm.vertex_charge.emplace_back(eg.graph.degree(v) - 4);
  }
  cm.face_charge.reserve(eg.faces.size());
  for (const Face& f : eg.faces) {
    cm.face_charge.emplace_back(f.degree() - 4);
  }
  return cm;
}

ChargeMap replay(const ChargeMap& initial, const TransferLog& log) {
  ChargeMap cm = initial;
  for (const Transfer& t : log) {
    cm.at(t.from) -= t.amount;
    cm.at(t.to) += t.amount;
  }
  return cm;
}

std::vector<std::pair<ElementRef, Rational>> negative_elements(const ChargeMap& cm) {
  std::vector<std::pair<ElementRef, Rational>> out;
  for (int v = 0; v < static_cast<int>(cm.vertex_charge.size()); ++v) {
    if (cm.vertex_charge[v].is_negative()) out.emplace_back(vertex_ref(v), cm.vertex_charge[v]);
  }
  for (int f = 0; f < static_cast<int>(cm.face_charge.size()); ++f) {
    if (cm.face_charge[f].is_negative()) out.emplace_back(face_ref(f), cm.face_charge[f]);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

DischargeResult apply_builtin_rules(const EmbeddedGraph& eg) {
  const Graph& g = eg.graph;
  DischargeResult result;
  result.initial = initial_charges(eg);
  result.mu_star = result.initial;

  auto transfer = [&](const char* rule, ElementRef from, ElementRef to, const Rational& amount) {
    result.log.push_back({rule, from, to, amount});
    result.mu_star.at(from) -= amount;
    result.mu_star.at(to) += amount;
  };

  // R1: 4-vertices pay adjacent 2-vertices, 1/9 with exactly one 4+-neighbor
  // and 1/6 otherwise.
  for (VertexId v = 0; v < g.n; ++v) {
    if (g.degree(v) != 4) continue;
    Rational t = count_neighbors_with_degree_at_least(g, v, 4) == 1 ? kNinth : kSixth;
    for (VertexId u : g.adj[v]) {
      if (g.degree(u) == 2) transfer("R1", vertex_ref(v), vertex_ref(u), t);
    }
  }

  // R2: 5-vertices pay 1/5 to adjacent 3--vertices.
  for (VertexId v = 0; v < g.n; ++v) {
    if (g.degree(v) != 5) continue;
    for (VertexId u : g.adj[v]) {
      if (g.degree(u) <= 3) transfer("R2", vertex_ref(v), vertex_ref(u), kFifth);
    }
  }

  // R3: 6+-vertices pay adjacent 4--vertices, 1/3 without a 5+-neighbor and
  // 2/5 with one.
  for (VertexId v = 0; v < g.n; ++v) {
    if (g.degree(v) < 6) continue;
    Rational t = count_neighbors_with_degree_at_least(g, v, 5) >= 1 ? kTwoFifths : kThird;
    for (VertexId u : g.adj[v]) {
      if (g.degree(u) <= 4) transfer("R3", vertex_ref(v), vertex_ref(u), t);
    }
  }

  // R4: 5-faces pay incident 2-vertices per incidence, 5/9 when the face has
  // exactly one 2-vertex incidence and 1/2 otherwise.
  for (const Face& f : eg.faces) {
    if (f.degree() != 5) continue;
    int n2 = incidence_count(eg, f, 2);
    if (n2 == 0) continue;
    Rational t = n2 == 1 ? kFiveNinths : kHalf;
    if (n2 > 2) {
      result.diagnostics.push_back(
          {"R4", "face " + std::to_string(f.id) + " has " + std::to_string(n2) +
                     " 2-vertex incidences; paying 1/2 per incidence"});
    }
    for (VertexId v : f.boundary_walk) {
      if (g.degree(v) == 2) transfer("R4", face_ref(f.id), vertex_ref(v), t);
    }
  }

  // R5: 7+-faces pay 1 to incident 2-vertices, per incidence.
  for (const Face& f : eg.faces) {
    if (f.degree() < 7) continue;
    for (VertexId v : f.boundary_walk) {
      if (g.degree(v) == 2) transfer("R5", face_ref(f.id), vertex_ref(v), Rational(1));
    }
  }

  // R6: equalize the charges of the two 2-vertices sharing a 5-face. Only
  // faces with exactly two 2-vertex incidences form a pair; a vertex claimed
  // by two pairs voids all of its pairs.
  struct Pair {
    FaceId face;
    VertexId a;
    VertexId b;
  };
  std::vector<Pair> pairs;
  std::vector<int> pair_uses(g.n, 0);
  for (const Face& f : eg.faces) {
    if (f.degree() != 5) continue;
    std::vector<VertexId> twos;
    for (VertexId v : f.boundary_walk) {
      if (g.degree(v) == 2) twos.push_back(v);
    }
    if (twos.size() != 2) {
      if (twos.size() > 2) {
        result.diagnostics.push_back(
            {"R6", "face " + std::to_string(f.id) + " has " + std::to_string(twos.size()) +
                       " 2-vertex incidences; averaging undefined, skipped"});
      }
      continue;
    }
    if (twos[0] == twos[1]) {
      result.diagnostics.push_back(
          {"R6", "face " + std::to_string(f.id) +
                     " meets the same 2-vertex twice; averaging skipped"});
      continue;
    }
    pairs.push_back({f.id, twos[0], twos[1]});
    ++pair_uses[twos[0]];
    ++pair_uses[twos[1]];
  }
  for (const Pair& p : pairs) {
    if (pair_uses[p.a] > 1 || pair_uses[p.b] > 1) {
      VertexId shared = pair_uses[p.a] > 1 ? p.a : p.b;
      result.diagnostics.push_back(
          {"R6", "vertex " + std::to_string(shared) + " sits in more than one 5-face pair; " +
                     "averaging for face " + std::to_string(p.face) + " skipped"});
      continue;
    }
    const Rational& ca = result.mu_star.vertex_charge[p.a];
    const Rational& cb = result.mu_star.vertex_charge[p.b];
    if (ca == cb) continue;
    VertexId rich = ca > cb ? p.a : p.b;
    VertexId poor = ca > cb ? p.b : p.a;
    Rational amount = (result.mu_star.vertex_charge[rich] - result.mu_star.vertex_charge[poor]) /
                      Rational(2);
    transfer("R6", vertex_ref(rich), vertex_ref(poor), amount);
  }

  // R7: 5+-faces pay 2/9 to incident 3-vertices, per incidence.
  for (const Face& f : eg.faces) {
    if (f.degree() < 5) continue;
    for (VertexId v : f.boundary_walk) {
      if (g.degree(v) == 3) transfer("R7", face_ref(f.id), vertex_ref(v), kTwoNinths);
    }
  }

  return result;
}

namespace {

// ---- case analysis -------------------------------------------------------
//
// Each element is matched to its case by kind, degree and (for 2-vertices)
// its 5-face profile; the hypotheses are the structural facts the case's
// charge arithmetic consumes. Applicable => mu* >= 0 is then a theorem, which
// the acceptance suite re-verifies on every corpus graph.

struct CaseBuilder {
  const EmbeddedGraph& eg;
  const Graph& g;
  const ChargeMap& mu_star;
  std::vector<CaseVerdict> out;

  void emit(ElementRef e, std::string case_id, bool applicable, std::string violated) {
    CaseVerdict cv;
    cv.element = e;
    cv.case_id = std::move(case_id);
    cv.applicable = applicable;
    cv.violated_hypothesis = std::move(violated);
    cv.mu_star = mu_star.at(e);
    cv.nonnegative = !cv.mu_star.is_negative();
    out.push_back(std::move(cv));
  }

  bool lemma_2_2_i_holds(VertexId v) const {
    int four_plus = 0;
    int six_plus = 0;
    for (VertexId u : g.adj[v]) {
      if (g.degree(u) >= 4) ++four_plus;
      if (g.degree(u) >= 6) ++six_plus;
    }
    return four_plus >= 2 && six_plus >= 1;
  }

  bool has_six_plus_neighbor(VertexId v) const {
    return std::any_of(g.adj[v].begin(), g.adj[v].end(),
                       [&](VertexId u) { return g.degree(u) >= 6; });
  }

  // First 3/4/6-face incident to v, if any.
  std::optional<FaceId> forbidden_face_at(VertexId v) const {
    for (FaceId fid : eg.faces_at(v)) {
      int k = eg.faces[fid].degree();
      if (k == 3 || k == 4 || k == 6) return fid;
    }
    return std::nullopt;
  }

  int five_face_incidences(VertexId v) const {
    int count = 0;
    for (FaceId fid : eg.faces_at(v)) {
      if (eg.faces[fid].degree() == 5) ++count;
    }
    return count;
  }

  void vertex_deg2(VertexId v) {
    ElementRef e = vertex_ref(v);
    int fives = five_face_incidences(v);
    std::string case_id = fives == 0 ? "case1" : "case2";

    if (auto bad = forbidden_face_at(v)) {
      int k = eg.faces[*bad].degree();
      emit(e, case_id, false,
           "incident to " + std::to_string(k) + "-face f" + std::to_string(*bad) +
               " (Lemma 2.3(ii))");
      return;
    }
    if (fives >= 2) {
      emit(e, "case3", false, "incident to two 5-faces (Lemma 2.3(iii))");
      return;
    }
    if (fives == 0) {
      // Both incidences are 7+-faces; R5 alone restores -2+2*1.
      emit(e, "case1", true, "");
      return;
    }

    FaceId five = -1;
    for (FaceId fid : eg.faces_at(v)) {
      if (eg.faces[fid].degree() == 5) five = fid;
    }
    const Face& f = eg.faces[five];
    int n2 = incidence_count(eg, f, 2);

    if (n2 == 1) {
      if (!lemma_2_2_i_holds(v)) {
        emit(e, "case2", false, "needs two 4+-neighbors, one 6+ (Lemma 2.2(i))");
        return;
      }
      emit(e, "case2", true, "");
      return;
    }
    if (n2 > 2) {
      emit(e, "case3", false,
           "N2(f" + std::to_string(five) + ")=" + std::to_string(n2) + " > 2 (Lemma 2.4(i))");
      return;
    }

    // Case 3: v shares the 5-face with exactly one other 2-vertex u.
    std::vector<VertexId> sorted_walk = f.boundary_walk;
    std::sort(sorted_walk.begin(), sorted_walk.end());
    if (std::adjacent_find(sorted_walk.begin(), sorted_walk.end()) != sorted_walk.end()) {
      emit(e, "case3", false,
           "boundary walk of f" + std::to_string(five) + " is not a 5-cycle (Lemma 2.3(i))");
      return;
    }
    VertexId u = -1;
    for (VertexId w : f.boundary_walk) {
      if (w != v && g.degree(w) == 2) u = w;
    }
    if (!lemma_2_2_i_holds(v)) {
      emit(e, "case3", false, "needs two 4+-neighbors, one 6+ (Lemma 2.2(i))");
      return;
    }
    if (!lemma_2_2_i_holds(u)) {
      emit(e, "case3", false,
           "partner v" + std::to_string(u) + " needs two 4+-neighbors, one 6+ (Lemma 2.2(i))");
      return;
    }
    if (auto bad = forbidden_face_at(u)) {
      emit(e, "case3", false,
           "partner v" + std::to_string(u) + " incident to " +
               std::to_string(eg.faces[*bad].degree()) + "-face (Lemma 2.3(ii))");
      return;
    }
    if (five_face_incidences(u) != 1) {
      emit(e, "case3", false,
           "partner v" + std::to_string(u) + " incident to two 5-faces (Lemma 2.3(iii))");
      return;
    }

    // Around the 5-cycle: v3 is the common neighbor of v and u, v1 the other
    // neighbor of v, v2 the other neighbor of u.
    const auto& walk = f.boundary_walk;
    int pv = static_cast<int>(std::find(walk.begin(), walk.end(), v) - walk.begin());
    auto at = [&](int i) { return walk[((i % 5) + 5) % 5]; };
    VertexId v3;
    VertexId v1;
    VertexId v2;
    if (at(pv + 2) == u) {
      v3 = at(pv + 1);
      v1 = at(pv - 1);
      v2 = at(pv + 3);
    } else {  // u == at(pv + 3) == at(pv - 2)
      v3 = at(pv - 1);
      v1 = at(pv + 1);
      v2 = at(pv - 3);
    }

    if (g.degree(v3) <= 5) {
      // Subcase (i): both middles are 6+ by Lemma 2.2(i); nothing more needed.
      emit(e, "case3", true, "");
      return;
    }
    // v3 is 6+.
    for (VertexId middle : {v1, v2}) {
      if (g.degree(middle) == 4 && !has_six_plus_neighbor(middle)) {
        emit(e, "case3", false,
             "4-vertex v" + std::to_string(middle) + " on the 5-face lacks a 6+-neighbor " +
                 "(Lemma 2.2(ii))");
        return;
      }
    }
    emit(e, "case3", true, "");
  }

  void vertex_deg3(VertexId v) {
    ElementRef e = vertex_ref(v);
    if (!has_six_plus_neighbor(v)) {
      emit(e, "case4", false, "no 6+-neighbor (Lemma 2.2(i))");
      return;
    }
    for (FaceId fid : eg.faces_at(v)) {
      if (eg.faces[fid].degree() < 5) {
        emit(e, "case4", false,
             "incident to " + std::to_string(eg.faces[fid].degree()) + "-face f" +
                 std::to_string(fid) + " (Lemma 2.3(ii))");
        return;
      }
    }
    emit(e, "case4", true, "");
  }

  void vertex_deg4(VertexId v) {
    ElementRef e = vertex_ref(v);
    if (!has_six_plus_neighbor(v)) {
      emit(e, "case5", false, "no 6+-neighbor (Lemma 2.2(ii))");
      return;
    }
    emit(e, "case5", true, "");
  }

  void face(const Face& f) {
    ElementRef e = face_ref(f.id);
    int k = f.degree();
    if (k < 3) {
      emit(e, "face-degenerate", false,
           "face of degree " + std::to_string(k) + " has no case (walk shorter than a cycle)");
      return;
    }
    if (k == 3) {
      emit(e, "face3", false, "3-faces are forbidden (Lemma 2.3(ii))");
      return;
    }
    if (k == 4 || k == 6) {
      // No rule touches 4-faces; 6-faces pay at most 6*(2/9) from charge 2.
      emit(e, k == 4 ? "face4" : "face6", true, "");
      return;
    }

    int n2 = incidence_count(eg, f, 2);
    int n3 = incidence_count(eg, f, 3);
    int half = k / 2;
    if (k == 5) {
      if (n2 > 2) {
        emit(e, "case8", false, "N2=" + std::to_string(n2) + " > 2 (Lemma 2.4(i))");
        return;
      }
      int n3_bound = n2 == 2 ? 0 : k - 2 * n2 - 1;
      if (n3 > n3_bound) {
        emit(e, "case8", false,
             "N3=" + std::to_string(n3) + " > " + std::to_string(n3_bound) + " (Lemma 2.4(" +
                 (n2 == 2 ? "iii" : "ii") + "))");
        return;
      }
      emit(e, "case8", true, "");
      return;
    }

    // k >= 7
    if (n2 > half) {
      emit(e, "case10", false,
           "N2=" + std::to_string(n2) + " > floor(k/2)=" + std::to_string(half) +
               " (Lemma 2.4(i))");
      return;
    }
    if (n2 == half) {
      if (n3 != 0) {
        emit(e, "case9", false,
             "N2=floor(k/2) forces N3=0, got N3=" + std::to_string(n3) + " (Lemma 2.4(iii))");
        return;
      }
      emit(e, "case9", true, "");
      return;
    }
    if (n3 > k - 2 * n2 - 1) {
      emit(e, "case10", false,
           "N3=" + std::to_string(n3) + " > k-2N2-1=" + std::to_string(k - 2 * n2 - 1) +
               " (Lemma 2.4(ii))");
      return;
    }
    emit(e, "case10", true, "");
  }

  void run() {
    for (VertexId v = 0; v < g.n; ++v) {
      switch (g.degree(v)) {
        case 0:
        case 1:
          emit(vertex_ref(v), "vertex-degenerate", false,
               "degree " + std::to_string(g.degree(v)) + " < 2 (minimum-degree property)");
          break;
        case 2: vertex_deg2(v); break;
        case 3: vertex_deg3(v); break;
        case 4: vertex_deg4(v); break;
        case 5: emit(vertex_ref(v), "case6", true, ""); break;
        default: emit(vertex_ref(v), "case7", true, ""); break;
      }
    }
    for (const Face& f : eg.faces) face(f);
  }
};

}  // namespace

std::vector<CaseVerdict> case_analysis_check(const EmbeddedGraph& eg, const ChargeMap& mu_star) {
  CaseBuilder builder{eg, eg.graph, mu_star, {}};
  builder.run();
  return std::move(builder.out);
}

}  // namespace defcol
