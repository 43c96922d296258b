#include "defcol/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "defcol/errors.hpp"

namespace defcol {

namespace {

void check_defects(const DefectVector& d) {
  if (d.k() < 1) throw std::invalid_argument("defect vector needs k >= 1");
  for (int b : d.d) {
    if (b < 0) throw std::invalid_argument("defect budgets must be nonnegative");
  }
}

bool assignment_valid(const Graph& g, const std::vector<int>& color, const DefectVector& d) {
  for (VertexId v = 0; v < g.n; ++v) {
    int same = 0;
    int budget = d.budget(color[v]);
    for (VertexId u : g.adj[v]) {
      if (color[u] == color[v] && ++same > budget) return false;
    }
  }
  return true;
}

}  // namespace

DefectVector parse_defects(const std::string& text) {
  DefectVector d;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    int value = std::stoi(item, &pos);
    if (pos != item.size() || value < 0) {
      throw std::invalid_argument("bad defect vector: " + text);
    }
    d.d.push_back(value);
  }
  if (d.k() < 1) throw std::invalid_argument("bad defect vector: " + text);
  return d;
}

bool ColorAssignment::complete() const {
  return std::none_of(color.begin(), color.end(), [](int c) { return c == kUnassigned; });
}

std::vector<ColorViolation> verify_coloring(const Graph& g, const ColorAssignment& a,
                                            const DefectVector& d) {
  check_defects(d);
  if (static_cast<int>(a.color.size()) != g.n || !a.complete()) {
    throw Error(Errc::IncompleteAssignment, "every vertex needs a color in 1..k");
  }
  for (int c : a.color) {
    if (c < 1 || c > d.k()) {
      throw Error(Errc::IncompleteAssignment, "color " + std::to_string(c) + " outside 1.." +
                                                  std::to_string(d.k()));
    }
  }
  std::vector<ColorViolation> violations;
  for (VertexId v = 0; v < g.n; ++v) {
    int same = 0;
    for (VertexId u : g.adj[v]) {
      if (a.color[u] == a.color[v]) ++same;
    }
    if (same > d.budget(a.color[v])) {
      violations.push_back({v, same, d.budget(a.color[v])});
    }
  }
  return violations;
}

std::optional<ColorAssignment> solve(const Graph& g, const DefectVector& d) {
  check_defects(d);
  const int n = g.n;
  const int k = d.k();

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  std::vector<int> color(n, kUnassigned);
  // count[v*k + (c-1)] = colored neighbors of v holding color c
  std::vector<int> count(static_cast<std::size_t>(n) * k, 0);
  auto cnt = [&](VertexId v, int c) -> int& { return count[static_cast<std::size_t>(v) * k + c - 1]; };

  auto has_feasible_color = [&](VertexId v) {
    for (int c = 1; c <= k; ++c) {
      if (cnt(v, c) <= d.budget(c)) return true;
    }
    return false;
  };

  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    VertexId v = order[idx];
    for (int c = 1; c <= k; ++c) {
      if (cnt(v, c) > d.budget(c)) continue;
      bool fits = true;
      for (VertexId u : g.adj[v]) {
        if (color[u] == c && cnt(u, c) + 1 > d.budget(c)) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;

      color[v] = c;
      for (VertexId u : g.adj[v]) ++cnt(u, c);
      bool viable = true;
      for (VertexId u : g.adj[v]) {
        if (color[u] == kUnassigned && !has_feasible_color(u)) {
          viable = false;
          break;
        }
      }
      if (viable && self(self, idx + 1)) return true;
      for (VertexId u : g.adj[v]) --cnt(u, c);
      color[v] = kUnassigned;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  return ColorAssignment{std::move(color)};
}

std::optional<ColorAssignment> brute_force(const Graph& g, const DefectVector& d) {
  check_defects(d);
  const int n = g.n;
  const int k = d.k();

  double states = std::pow(static_cast<double>(k), n);
  if (states > static_cast<double>(1 << 24)) {
    throw Error(Errc::InstanceTooLarge, "k^n exceeds 2^24");
  }

  std::vector<int> color(n, 1);
  for (;;) {
    if (assignment_valid(g, color, d)) return ColorAssignment{color};
    // lexicographic successor: last position is the fastest digit
    int pos = n - 1;
    while (pos >= 0 && color[pos] == k) {
      color[pos] = 1;
      --pos;
    }
    if (pos < 0) return std::nullopt;
    ++color[pos];
  }
}

namespace {

const DefectVector kTwoFour{{2, 4}};

void require_valid_24(const Graph& g, const ColorAssignment& a, const char* who) {
  bool ok = static_cast<int>(a.color.size()) == g.n && a.complete();
  if (ok) {
    for (int c : a.color) ok = ok && (c == 1 || c == 2);
  }
  if (!ok || !assignment_valid(g, a.color, kTwoFour)) {
    throw Error(Errc::InvalidInputColoring, std::string(who) + " needs a valid (2,4)-coloring");
  }
}

}  // namespace

ColorAssignment normalize_color2(const Graph& g, const ColorAssignment& a) {
  require_valid_24(g, a, "normalize_color2");
  ColorAssignment out = a;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < g.n; ++v) {
      if (out.color[v] != 2 || g.degree(v) > 4) continue;
      bool all_two = std::all_of(g.adj[v].begin(), g.adj[v].end(),
                                 [&](VertexId u) { return out.color[u] == 2; });
      if (all_two) {
        out.color[v] = 1;
        changed = true;
      }
    }
  }
  return out;
}

ColorAssignment extend_after_vertex_deletion(const Graph& g, VertexId v,
                                             const ColorAssignment& a) {
  if (v < 0 || v >= g.n) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  if (g.degree(v) != 4) {
    throw Error(Errc::PreconditionViolated,
                "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                    ", expected 4");
  }
  for (VertexId u : g.adj[v]) {
    if (g.degree(u) > 5) {
      throw Error(Errc::PreconditionViolated, "neighbor " + std::to_string(u) +
                                                  " has degree " + std::to_string(g.degree(u)) +
                                                  " > 5");
    }
  }

  Graph h = remove_vertex(g, v);
  require_valid_24(h, a, "extend_after_vertex_deletion");

  auto to_h = [v](VertexId x) { return x > v ? x - 1 : x; };
  std::vector<VertexId> candidates;
  for (VertexId u : g.adj[v]) candidates.push_back(to_h(u));
  std::sort(candidates.begin(), candidates.end());

  // The proof's recoloring pass, restricted to the deleted vertex's
  // neighborhood: any candidate colored 2 whose whole neighborhood in g-v is
  // colored 2 moves to color 1, until stable.
  ColorAssignment base = a;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId u : candidates) {
      if (base.color[u] != 2) continue;
      bool all_two = std::all_of(h.adj[u].begin(), h.adj[u].end(),
                                 [&](VertexId w) { return base.color[w] == 2; });
      if (all_two) {
        base.color[u] = 1;
        changed = true;
      }
    }
  }

  ColorAssignment out;
  out.color.assign(g.n, kUnassigned);
  for (VertexId x = 0; x < g.n; ++x) {
    if (x != v) out.color[x] = base.color[to_h(x)];
  }
  out.color[v] = 2;
  return out;
}

}  // namespace defcol
