#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "defcol/embedded.hpp"
#include "defcol/graph.hpp"

namespace defcol {

// One graph pulled from a corpus file: pre-embedded for planar_code input,
// abstract for edge lists without rotation lines.
struct CorpusEntry {
  std::string source;
  int index = 0;
  Graph graph;
  std::optional<EmbeddedGraph> embedded;
};

std::vector<CorpusEntry> load_corpus_file(const std::filesystem::path& path);

// Loads files and directories (recursively); per-file failures land in
// errors and the rest of the corpus still loads.
std::vector<CorpusEntry> load_corpus(const std::vector<std::filesystem::path>& paths,
                                     std::vector<std::string>& errors);

// Exhaustive labeled family members on exactly n vertices (n <= 8), encoded
// as bitmasks over the lexicographic edge slots (0,1),(0,2),...,(n-2,n-1).
// Connected, no 3-/4-/6-cycles; planarity is left to the caller's embedding
// step (it holds for nearly all survivors and must be computed anyway).
std::vector<std::uint32_t> generate_small_family_codes(int n);

Graph graph_from_code(int n, std::uint32_t mask);

// Runs fn(0..count-1) on a small worker pool; blocks until done.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace defcol
