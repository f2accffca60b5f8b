#pragma once

// The two-copies-per-vertex bipartite conversion of a web, the contraction
// of a matching back into a web, and König/Hall on finite bipartite graphs.

#include <optional>

#include "webcalc/core.hpp"

namespace webcalc {

struct BipartiteGraph {
  VertexSet left;   // M
  VertexSet right;  // W
  EdgeSet edges;    // pairs (left, right)

  // Throws InputError if the sides overlap or an edge does not go from the
  // left side to the right side.
  void validate() const;
  bool operator==(const BipartiteGraph&) const = default;
};

// Ids of the copies: "m:v" for the out-copy, "w:v" for the in-copy.
Vertex out_copy(const Vertex& v);
Vertex in_copy(const Vertex& v);

struct Conversion {
  BipartiteGraph delta;
  std::map<Vertex, Vertex> m_map;  // v -> m(v), for v outside B
  std::map<Vertex, Vertex> w_map;  // v -> w(v), for v outside A
};

// Δ(Γ): an edge (m(x), w(y)) per web edge (x, y), plus (m(x), w(x)) for
// every x outside A u B.
Conversion to_bipartite(const Web& web);

// J(Y): the Δ-edges of the warp edges, plus the identity edge of every
// vertex outside A u B not covered by a warp edge.
EdgeSet warp_to_matching(const Web& web, const Warp& warp);

// Λ(J) before trimming, with integer node handles. A node is either a
// contracted matching edge or an unmatched vertex of Δ.
struct Contraction {
  struct Node {
    Vertex id;
    std::optional<Vertex> left;   // m-part
    std::optional<Vertex> right;  // w-part
  };
  std::vector<Node> nodes;
  std::vector<std::vector<int>> out;
  std::vector<int> sources;  // unmatched left vertices
  std::vector<int> sinks;    // unmatched right vertices
  std::map<Vertex, int> node_of_left;
  std::map<Vertex, int> node_of_right;
};

// Throws InputError if J is not a matching inside the graph's edges.
Contraction contract_matching(const BipartiteGraph& graph, const EdgeSet& j);

// Λ(J) as a web: A = unmatched left vertices, B = unmatched right vertices,
// an edge (u, v) whenever (m-part of u, w-part of v) is an edge of the graph.
// A contracted pair gets the id "[m,w]".
Web matching_to_web(const BipartiteGraph& graph, const EdgeSet& j);

struct KonigResult {
  EdgeSet matching;
  VertexSet cover;
  std::map<Edge, Vertex> choice;  // matching edge -> its endpoint in cover
};

// Maximum matching and minimum vertex cover, the cover taking exactly one
// endpoint of every matching edge.
KonigResult konig(const BipartiteGraph& graph);

// Independent check of a König certificate: matching inside the graph,
// cover covering every edge, choice a bijection onto the cover.
bool konig_certificate_check(const BipartiteGraph& graph,
                             const KonigResult& result,
                             std::string* reason = nullptr);

struct HallResult {
  bool matchable = false;
  EdgeSet matching;       // saturates the left side when matchable
  VertexSet deficient;    // otherwise a left set with fewer neighbours
  VertexSet neighbours;   // N(deficient)
};

HallResult hall_check(const BipartiteGraph& graph);

// Neighbours of a left set.
VertexSet neighbourhood(const BipartiteGraph& graph, const VertexSet& left);

}  // namespace webcalc
