#pragma once

// Alternating paths relative to a warp: validation, application, safety,
// degeneracy, augmentation and families of safe alternating paths.

#include <optional>
#include <variant>

#include "webcalc/core.hpp"

namespace webcalc {

enum class LinkKind { kForward, kBackward };

// A backward link is stored in the warp's direction: its initial vertex is
// where the alternating path leaves it, its terminal where it enters.
struct Link {
  LinkKind kind;
  Path path;

  bool operator==(const Link&) const = default;
};

class AlternatingPath {
 public:
  // A single forward link may be a lone vertex (an A-B path of length 0).
  // Throws InputError for an empty list, other links of fewer than one edge,
  // consecutive links of the same kind or links that do not join up.
  explicit AlternatingPath(std::vector<Link> links);

  // Splits a vertex sequence into links: a step (p, q) is backward exactly
  // when (q, p) is an edge of `warp`.
  static AlternatingPath from_sequence(const Warp& warp,
                                       const std::vector<Vertex>& sequence);

  const std::vector<Link>& links() const { return links_; }
  bool starts_forward() const;
  bool ends_forward() const;
  const Vertex& initial() const;
  const Vertex& terminal() const;

  // The vertices in traversal order, backward links read in reverse.
  std::vector<Vertex> sequence() const;
  std::string to_string() const;

  EdgeSet forward_edges() const;
  EdgeSet backward_edges() const;
  VertexSet vertex_set() const;

  bool operator==(const AlternatingPath&) const = default;

 private:
  std::vector<Link> links_;
};

struct AlternatingCheck {
  bool valid = false;
  std::string reason;  // first violated condition when invalid
  bool augmenting = false;
  bool reducing = false;
  bool leaving = false;  // ends outside V[Y]
};

// Checks the alternation conditions relative to `warp`. Forward links must
// additionally be paths of `web` when a web is given. With `partial`, the
// end-point condition on the terminal is skipped (for prefixes in a search).
AlternatingCheck check_alternating(const Web* web, const Warp& warp,
                                   const AlternatingPath& q,
                                   bool partial = false);

bool validate_alternating(const Web& web, const Warp& warp,
                          const AlternatingPath& q);

// Y△Q. Throws PreconditionError if q is not alternating for `warp`.
Cyclowarp apply_alternating(const Warp& warp, const AlternatingPath& q);

// Backward usage of each warp path is one interval and the new edges are
// acyclic.
bool is_safe(const Warp& warp, const AlternatingPath& q);

// Y△Q has a path through in(Q) and then ter(Q).
bool is_degenerate(const Warp& warp, const AlternatingPath& q);

// An augmenting alternating path for a warp of A-B paths, or none when the
// warp is of maximum size. Found as a shortest path in the contraction of
// J(warp).
std::optional<AlternatingPath> find_augmenting(const Web& web,
                                               const Warp& warp,
                                               StepBudget* budget = nullptr);

// Grows a warp of A-B paths from the singletons of A n B by augmentation.
Warp strongly_maximal_warp(const Web& web, StepBudget* budget = nullptr);

struct SapFamily {
  std::map<Vertex, AlternatingPath> paths;
  // Starting vertices whose Z-path is a single vertex; their safe
  // alternating path is the trivial one at the vertex itself.
  VertexSet stationary;

  // Terminal of each member, trivial members included.
  std::map<Vertex, Vertex> terminals() const;
};

// For every z in in[Z] \ in[Y] (each required to lie outside V[Y]) a
// z-starting, Y-leaving safe alternating path ending in ter[Z], with
// pairwise distinct ends. Fractured Z is handled by splitting shared
// junction vertices. Throws PreconditionError if in[Z] does not contain
// in[Y]; InternalError if the search fails or runs out of steps.
SapFamily sap_family(const Web& web, const std::variant<Warp, FracturedWarp>& z,
                     const Warp& y, std::size_t step_limit = 0);

}  // namespace webcalc
