#pragma once

#include <string>
#include <vector>

#include "defcol/embedded.hpp"

namespace defcol {

struct LemmaWitness {
  enum class Kind { Vertex, Face };

  Kind kind = Kind::Vertex;
  int element = 0;
  std::string reason;
};

struct LemmaReport {
  std::string lemma;
  bool holds = true;
  std::vector<LemmaWitness> witnesses;
};

// Every 3--vertex must have at least two (d1+2)+-neighbors, one of them a
// (d2+2)+-neighbor. Requires d1 <= d2.
LemmaReport check_lemma_2_1(const Graph& g, int d1, int d2);

// (i) 3--vertices: two 4+-neighbors, one of them 6+. (ii) 4-vertices: some
// 6+-neighbor. Witness reasons are tagged (i)/(ii).
LemmaReport check_lemma_2_2(const Graph& g);

// (i) faces of degree 3..9 have cycle boundary walks; (ii) no 3-, 4- or
// 6-face; (iii) no 2-vertex with two 5-face incidences (with multiplicity).
LemmaReport check_lemma_2_3(const EmbeddedGraph& eg);

// Per k-face: (i) N2 <= floor(k/2); (ii) N3 <= k-2*N2-1 when N2 < floor(k/2);
// (iii) N3 = 0 when N2 = floor(k/2).
LemmaReport check_lemma_2_4(const EmbeddedGraph& eg);

// Minimum degree >= 2.
LemmaReport check_min_degree(const Graph& g);

// All minimal-counterexample reports: min-degree, 2.1 with (2,4), 2.2, 2.3,
// 2.4. Throws Error(NotInFamily) when eg is outside the family.
std::vector<LemmaReport> scan_all(const EmbeddedGraph& eg);

}  // namespace defcol
