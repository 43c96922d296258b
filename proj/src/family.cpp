#include "defcol/family.hpp"

#include <algorithm>
#include <deque>

#include "defcol/embedding.hpp"
#include "defcol/errors.hpp"

namespace defcol {

namespace {

// Simple-path DFS from a fixed smallest vertex; all other path vertices stay
// above it, so each cycle is found from its minimum vertex exactly.
bool dfs_cycle(const Graph& g, VertexId start, VertexId current, int remaining,
               std::vector<char>& on_path, std::vector<VertexId>& path) {
  if (remaining == 0) {
    if (g.has_edge(current, start)) return true;
    return false;
  }
  for (VertexId u : g.adj[current]) {
    if (u <= start || on_path[u]) continue;
    on_path[u] = 1;
    path.push_back(u);
    if (dfs_cycle(g, start, u, remaining - 1, on_path, path)) return true;
    path.pop_back();
    on_path[u] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<VertexId>> find_cycle_of_length(const Graph& g, int length) {
  if (length < 3) return std::nullopt;
  std::vector<char> on_path(g.n, 0);
  for (VertexId s = 0; s < g.n; ++s) {
    std::vector<VertexId> path{s};
    on_path.assign(g.n, 0);
    on_path[s] = 1;
    if (dfs_cycle(g, s, s, length - 1, on_path, path)) return path;
  }
  return std::nullopt;
}

bool has_cycle_of_length(const Graph& g, int length) {
  return find_cycle_of_length(g, length).has_value();
}

std::optional<int> girth(const Graph& g) {
  // BFS from every root; the shortest cycle is seen from one of its vertices
  // as the first non-tree edge closing two shortest paths.
  int best = -1;
  std::vector<int> dist(g.n);
  std::vector<VertexId> parent(g.n);
  for (VertexId root = 0; root < g.n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<VertexId> queue{root};
    dist[root] = 0;
    parent[root] = -1;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : g.adj[v]) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v]) {
          int cycle = dist[u] + dist[v] + 1;
          if (best < 0 || cycle < best) best = cycle;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

const char* family_reason_name(FamilyVerdict::Reason reason) {
  switch (reason) {
    case FamilyVerdict::Reason::InFamily: return "InFamily";
    case FamilyVerdict::Reason::NotConnected: return "NotConnected";
    case FamilyVerdict::Reason::NotPlanar: return "NotPlanar";
    case FamilyVerdict::Reason::ForbiddenCycle: return "ForbiddenCycle";
  }
  return "?";
}

FamilyVerdict is_in_family(const Graph& g) {
  FamilyVerdict verdict;
  if (!g.connected()) {
    verdict.reason = FamilyVerdict::Reason::NotConnected;
    return verdict;
  }
  // Planarity goes through the embedding module even when the caller already
  // holds a rotation system; malformed rotations must not decide membership.
  if (!find_embedding(g)) {
    verdict.reason = FamilyVerdict::Reason::NotPlanar;
    return verdict;
  }
  for (int length : {3, 4, 6}) {
    if (auto cycle = find_cycle_of_length(g, length)) {
      verdict.reason = FamilyVerdict::Reason::ForbiddenCycle;
      verdict.cycle = std::move(*cycle);
      return verdict;
    }
  }
  verdict.in_family = true;
  return verdict;
}

}  // namespace defcol
