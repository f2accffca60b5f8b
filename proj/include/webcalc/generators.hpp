#pragma once

// Instance generators for the property suites: small-web enumeration
// helpers, random warps, random alternating paths and hand-shaped unsafe
// paths, and (Z, Y) pairs for families of safe alternating paths.

#include <variant>

#include "webcalc/alternating.hpp"
#include "webcalc/io.hpp"

namespace webcalc::gen {

// Every simple path of the web (trivial ones included), depth first.
std::vector<Path> all_paths(const Web& web);
// Every warp made of A-B paths, the empty warp included.
std::vector<Warp> all_ab_warps(const Web& web);

// Disjoint random walks. Each walk starts at a vertex of `starts` (or any
// vertex when `starts` is empty) and stops at random or when stuck.
Warp random_warp(const Web& web, Rng& rng, std::size_t max_paths,
                 const VertexSet& starts = {});

// A random alternating path relative to `warp`, grown link by link and
// kept only if valid. Forward links use web edges.
std::optional<AlternatingPath> random_alternating(const Web& web,
                                                  const Warp& warp, Rng& rng);

struct AlternatingCase {
  Web web;
  Warp warp;
  AlternatingPath path;
  std::string shape;
};

// A valid path that runs backward over two separate stretches of one warp
// path, embedded in random surroundings.
AlternatingCase unsafe_two_intervals(Rng& rng);
// A valid path whose new edges close a cycle, embedded likewise.
AlternatingCase unsafe_cycle(Rng& rng);

struct SapCase {
  Web web;
  std::variant<Warp, FracturedWarp> z;
  Warp y;
};

// A random warp Y and a warp (sometimes fractured) Z of the web with in[Z]
// containing in[Y] and its other starting vertices off V[Y]; none if the
// draw leaves no room for such a Z.
std::optional<SapCase> sap_case_in(const Web& web, Rng& rng);
// The same on a random web of 3..max_vertices vertices.
SapCase random_sap_case(Rng& rng, std::size_t max_vertices);

// The instance of the worked example: Y = {(a,b,c,d)} and
// Z = {(a,d), (s,b,t), (x,c,y)} in the web of their edges.
SapCase worked_example();

}  // namespace webcalc::gen
