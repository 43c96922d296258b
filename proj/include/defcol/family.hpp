#pragma once

#include <optional>
#include <vector>

#include "defcol/graph.hpp"

namespace defcol {

// True iff g contains a simple cycle on exactly length vertices (length >= 3).
bool has_cycle_of_length(const Graph& g, int length);

// The cycle itself, as a vertex sequence, when one exists.
std::optional<std::vector<VertexId>> find_cycle_of_length(const Graph& g, int length);

// Shortest-cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Membership in the target family: connected simple planar graphs containing
// no 3-, 4-, or 6-cycles.
struct FamilyVerdict {
  enum class Reason { InFamily, NotConnected, NotPlanar, ForbiddenCycle };

  bool in_family = false;
  Reason reason = Reason::InFamily;
  std::vector<VertexId> cycle;  // witness when reason == ForbiddenCycle

  explicit operator bool() const { return in_family; }
};

const char* family_reason_name(FamilyVerdict::Reason reason);

FamilyVerdict is_in_family(const Graph& g);

}  // namespace defcol
