#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "defcol/embedded.hpp"

namespace defcol {

// Planarity test plus combinatorial embedding for a connected simple graph.
// nullopt means not planar. Throws Error(DisconnectedInput).
std::optional<EmbeddedGraph> find_embedding(const Graph& g);

// planar_code: ">>planar_code<<" header, then per graph a vertex-count byte
// followed by each vertex's clockwise neighbor list terminated by 0 (1-based,
// single-byte encoding, n <= 255).
std::vector<EmbeddedGraph> parse_planar_code(const std::vector<std::uint8_t>& bytes);

std::vector<std::uint8_t> serialize_planar_code(const std::vector<EmbeddedGraph>& graphs);

}  // namespace defcol
