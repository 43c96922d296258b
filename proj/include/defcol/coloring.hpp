#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defcol/graph.hpp"

namespace defcol {

// Defect budgets (d1,...,dk): a vertex colored i tolerates up to d[i-1]
// neighbors of its own color.
struct DefectVector {
  std::vector<int> d;

  int k() const { return static_cast<int>(d.size()); }
  int budget(int color) const { return d[color - 1]; }  // colors are 1-based
};

DefectVector parse_defects(const std::string& text);  // "2,4" -> {2,4}

constexpr int kUnassigned = 0;

struct ColorAssignment {
  std::vector<int> color;  // per vertex, 1..k or kUnassigned

  bool complete() const;
};

struct ColorViolation {
  VertexId v = 0;
  int same_color_neighbors = 0;
  int budget = 0;
};

// Empty result means the assignment is a valid defective coloring. Throws
// Error(IncompleteAssignment).
std::vector<ColorViolation> verify_coloring(const Graph& g, const ColorAssignment& a,
                                            const DefectVector& d);

// Exact backtracking over vertices in descending-degree order (ties by id).
// nullopt iff no assignment exists.
std::optional<ColorAssignment> solve(const Graph& g, const DefectVector& d);

// Exhaustive oracle: enumerates assignments in lexicographic order and
// returns the first valid one. Guarded by k^n <= 2^24.
std::optional<ColorAssignment> brute_force(const Graph& g, const DefectVector& d);

// Recolors to color 1, repeatedly, every 4--vertex colored 2 whose neighbors
// all have color 2. Input must be a valid (2,4)-coloring; so is the output.
ColorAssignment normalize_color2(const Graph& g, const ColorAssignment& a);

// The constructive reduction: v must be a 4-vertex of g whose neighbors are
// all 5--vertices, and a a valid (2,4)-coloring of g-v (canonical ids: labels
// above v shifted down). Normalizes v's neighbors, then colors v with 2.
ColorAssignment extend_after_vertex_deletion(const Graph& g, VertexId v,
                                             const ColorAssignment& a);

}  // namespace defcol
