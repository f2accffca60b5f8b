#pragma once

// Menger structures, linkages and safe single-path linking on finite webs.

#include <optional>

#include "webcalc/core.hpp"

namespace webcalc {

// Disjoint A-B paths and a separator made of exactly one vertex per path.
struct MengerStructure {
  Warp paths;
  VertexSet separator;
  std::map<Path, Vertex> choice;

  bool operator==(const MengerStructure&) const = default;
};

// For each path of a maximum A-B warp: the last vertex of the path reached
// by an A-starting alternating path, or its initial vertex if none is.
std::map<Path, Vertex> blocking_vertices(const Web& web, const Warp& paths,
                                         StepBudget* budget = nullptr);

MengerStructure menger_structure(const Web& web, StepBudget* budget = nullptr);

// Re-verifies every structural claim of `s` against `web` from scratch.
bool menger_certificate_check(const Web& web, const MengerStructure& s,
                              std::string* reason = nullptr);

// A warp linking every source to B, if one exists.
std::optional<Warp> linkage(const Web& web, StepBudget* budget = nullptr);

bool is_hindered(const Web& web);

// An a-B path whose removal leaves the web unhindered. Throws
// PreconditionError if a is not a source or the web is hindered.
Path safe_link(const Web& web, const Vertex& a);

}  // namespace webcalc
