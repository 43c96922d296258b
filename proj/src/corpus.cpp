#include "defcol/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "defcol/embedding.hpp"
#include "defcol/errors.hpp"

namespace defcol {

namespace {

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::BadHeader, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool looks_like_planar_code(const std::vector<std::uint8_t>& bytes) {
  static const std::string header = ">>planar_code<<";
  return bytes.size() >= header.size() &&
         std::equal(header.begin(), header.end(), bytes.begin());
}

}  // namespace

std::vector<CorpusEntry> load_corpus_file(const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes = read_file_bytes(path);
  std::vector<CorpusEntry> entries;
  if (looks_like_planar_code(bytes)) {
    int index = 0;
    for (EmbeddedGraph& eg : parse_planar_code(bytes)) {
      CorpusEntry entry;
      entry.source = path.string();
      entry.index = index++;
      entry.graph = eg.graph;
      entry.embedded = std::move(eg);
      entries.push_back(std::move(entry));
    }
  } else {
    EdgeListFile parsed = parse_edge_list(std::string(bytes.begin(), bytes.end()));
    CorpusEntry entry;
    entry.source = path.string();
    entry.graph = parsed.graph;
    if (parsed.rotation) {
      entry.embedded = EmbeddedGraph::make(parsed.graph, *parsed.rotation);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::vector<std::filesystem::path>& paths,
                                     std::vector<std::string>& errors) {
  std::vector<std::filesystem::path> files;
  for (const auto& path : paths) {
    if (std::filesystem::is_directory(path)) {
      for (const auto& e : std::filesystem::recursive_directory_iterator(path)) {
        if (e.is_regular_file()) files.push_back(e.path());
      }
    } else {
      files.push_back(path);
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> entries;
  for (const auto& file : files) {
    try {
      auto batch = load_corpus_file(file);
      std::move(batch.begin(), batch.end(), std::back_inserter(entries));
    } catch (const std::exception& e) {
      errors.push_back(file.string() + ": " + e.what());
    }
  }
  return entries;
}

namespace {

// Bounded simple-path search between the endpoints of a prospective edge;
// closing a path of length 2, 3 or 5 would create a 3-, 4- or 6-cycle.
bool forbidden_path_exists(const std::uint8_t adj[8], int from, int target, int visited,
                           int length) {
  if (length == 0) return from == target;
  if (from == target) return false;  // simple paths only
  std::uint8_t nbrs = adj[from] & ~visited;
  while (nbrs) {
    int u = __builtin_ctz(nbrs);
    nbrs &= nbrs - 1;
    if (forbidden_path_exists(adj, u, target, visited | (1 << u), length - 1)) return true;
  }
  return false;
}

bool creates_forbidden_cycle(const std::uint8_t adj[8], int u, int v) {
  for (int length : {2, 3, 5}) {
    if (forbidden_path_exists(adj, u, v, 1 << u, length)) return true;
  }
  return false;
}

bool mask_connected(const std::uint8_t adj[8], int n) {
  int seen = 1;
  int frontier = 1;
  while (frontier) {
    int next = 0;
    while (frontier) {
      int v = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      next |= adj[v] & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return seen == (1 << n) - 1;
}

struct SmallGen {
  int n;
  std::vector<std::pair<int, int>> slots;
  std::uint8_t adj[8] = {};
  std::vector<std::uint32_t>& out;

  void rec(std::size_t slot, std::uint32_t mask) {
    if (slot == slots.size()) {
      if (mask_connected(adj, n)) out.push_back(mask);
      return;
    }
    rec(slot + 1, mask);
    auto [u, v] = slots[slot];
    if (!creates_forbidden_cycle(adj, u, v)) {
      adj[u] |= static_cast<std::uint8_t>(1 << v);
      adj[v] |= static_cast<std::uint8_t>(1 << u);
      rec(slot + 1, mask | (1u << slot));
      adj[u] &= static_cast<std::uint8_t>(~(1 << v));
      adj[v] &= static_cast<std::uint8_t>(~(1 << u));
    }
  }
};

}  // namespace

std::vector<std::uint32_t> generate_small_family_codes(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("generate_small_family_codes needs 1 <= n <= 8");
  std::vector<std::uint32_t> out;
  SmallGen gen{n, {}, {}, out};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) gen.slots.emplace_back(u, v);
  }
  gen.rec(0, 0);
  return out;
}

Graph graph_from_code(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int slot = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++slot) {
      if (mask & (1u << slot)) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  int spawn = std::min(jobs, count);
  workers.reserve(spawn);
  for (int w = 0; w < spawn; ++w) {
    workers.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace defcol
