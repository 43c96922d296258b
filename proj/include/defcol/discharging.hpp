#pragma once

#include <compare>
#include <string>
#include <vector>

#include "defcol/embedded.hpp"
#include "defcol/rational.hpp"

namespace defcol {

struct ElementRef {
  enum class Kind { Vertex, Face };

  Kind kind = Kind::Vertex;
  int id = 0;

  friend bool operator==(const ElementRef&, const ElementRef&) = default;
  friend std::strong_ordering operator<=>(const ElementRef&, const ElementRef&) = default;
};

ElementRef vertex_ref(VertexId v);
ElementRef face_ref(FaceId f);
std::string element_name(const ElementRef& e);  // "v12" / "f3"

// Exact rational charge per vertex and per face.
struct ChargeMap {
  std::vector<Rational> vertex_charge;
  std::vector<Rational> face_charge;

  Rational& at(const ElementRef& e);
  const Rational& at(const ElementRef& e) const;
  Rational total() const;

  friend bool operator==(const ChargeMap&, const ChargeMap&) = default;
};

struct Transfer {
  std::string rule;
  ElementRef from;
  ElementRef to;
  Rational amount;
};

using TransferLog = std::vector<Transfer>;

struct Diagnostic {
  std::string rule;
  std::string message;
};

struct DischargeResult {
  ChargeMap initial;
  ChargeMap mu_star;
  TransferLog log;
  std::vector<Diagnostic> diagnostics;
};

// mu(v) = d(v) - 4, mu(f) = d(f) - 4; the total is -8 on connected planar
// input.
ChargeMap initial_charges(const EmbeddedGraph& eg);

// The built-in rules R1..R7: R1-R5 from the initial state, then R6 (pairwise
// averaging over 5-faces carrying exactly two 2-vertex incidences), then R7.
// All transfers are logged; face-to-vertex amounts are per incidence.
DischargeResult apply_builtin_rules(const EmbeddedGraph& eg);

// Replays a log from initial charges; reproduces the final map exactly.
ChargeMap replay(const ChargeMap& initial, const TransferLog& log);

// Elements with negative charge, sorted by charge ascending (ties by element).
std::vector<std::pair<ElementRef, Rational>> negative_elements(const ChargeMap& cm);

// One row of the case-(1)-(10) analysis.
struct CaseVerdict {
  ElementRef element;
  std::string case_id;              // "case1".."case10", "face346", "deg01"
  bool applicable = false;
  std::string violated_hypothesis;  // set iff not applicable
  Rational mu_star;
  bool nonnegative = false;
};

// Checks, per element, the hypotheses the paper's case invokes; applicable
// elements must come out with mu* >= 0.
std::vector<CaseVerdict> case_analysis_check(const EmbeddedGraph& eg, const ChargeMap& mu_star);

}  // namespace defcol
