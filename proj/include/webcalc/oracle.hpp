#pragma once

// Brute-force ground truth on small instances. Nothing here calls the
// separation, alternating, menger or waves algorithms.

#include <cstdint>

#include "webcalc/bipartite.hpp"
#include "webcalc/core.hpp"

namespace webcalc::oracle {

struct EnumerationBudget {
  std::size_t max_vertices = default_oracle_bound();
  std::size_t max_cases = 5'000'000;
  std::uint64_t seed = 1;
};

// ν(A, B): the largest number of disjoint A-B paths.
std::size_t brute_nu(const Web& web, const EnumerationBudget& budget = {});

// Every wave of the web, each listed once, in a canonical order.
std::vector<Warp> enumerate_waves(const Web& web,
                                  const EnumerationBudget& budget = {});

// Some wave misses a source.
bool has_hindrance(const Web& web, const EnumerationBudget& budget = {});

// Every X-Y path meets S (reachability over bit masks).
bool separates(const Web& web, const VertexSet& s, const VertexSet& x,
               const VertexSet& y);

// Vertices whose every path to B meets S.
VertexSet roof_of(const Web& web, const VertexSet& s);

// Maximum matching size by simple augmenting search.
std::size_t max_matching_size(const BipartiteGraph& graph);
// Minimum vertex cover size by subset enumeration.
std::size_t min_cover_size(const BipartiteGraph& graph,
                           const EnumerationBudget& budget = {});

// All webs on 0..max_vertices vertices named v0, v1, ..., over every edge
// set and every labelling of vertices as source, sink, both or neither,
// after repair and with repeats removed.
std::vector<Web> all_small_webs(std::size_t max_vertices);

// All bipartite graphs with left side l0.. and right side r0.. of the given
// sizes and any edge set.
std::vector<BipartiteGraph> all_bipartite_graphs(std::size_t left,
                                                 std::size_t right);

}  // namespace webcalc::oracle
