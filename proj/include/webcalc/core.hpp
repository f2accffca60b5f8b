#pragma once

// Webs, paths, warps and the warp-level operations.
//
// Vertex ids are opaque strings. Every set is an ordered std::set, so all
// iteration (and therefore all output) follows the lexicographic order of
// the ids.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace webcalc {

using Vertex = std::string;
using VertexSet = std::set<Vertex>;
using Edge = std::pair<Vertex, Vertex>;
using EdgeSet = std::set<Edge>;

// Errors. InputError covers malformed or inconsistent input, PreconditionError
// a call outside an operation's domain, BudgetError an exhausted search or
// enumeration bound, InternalError a broken invariant (a bug).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class InputError : public Error {
 public:
  using Error::Error;
};
class PreconditionError : public Error {
 public:
  using Error::Error;
};
class BudgetError : public Error {
 public:
  using Error::Error;
};
class InternalError : public Error {
 public:
  using Error::Error;
};

// Vertex bound for brute-force routines: 16, or WEBCALC_ORACLE_BOUND if set.
std::size_t default_oracle_bound();

// Caps the work of a search; spend() throws BudgetError once the limit is
// passed.
class StepBudget {
 public:
  explicit StepBudget(std::size_t limit = 50'000'000) : limit_(limit) {}
  void spend(std::size_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) {
      throw BudgetError("step budget of " + std::to_string(limit_) +
                        " exhausted");
    }
  }
  std::size_t used() const { return used_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

class Web;

enum class RepairMode { kRepair, kStrict };

// What make_web removed to satisfy the web conventions.
struct WebRepairs {
  EdgeSet self_loops;
  EdgeSet into_sources;  // head in A
  EdgeSet out_of_sinks;  // tail in B
  std::size_t duplicate_edges = 0;
  VertexSet pruned_sources;  // A-vertices with no path to B

  bool empty() const;
};

struct BuiltWeb;

// A finite digraph with a source set A and a sink set B. No edge enters A or
// leaves B, there are no self-loops, and every source reaches B. Instances
// are only produced by make_web (and the operations built on it), so these
// invariants always hold.
class Web {
 public:
  Web() = default;

  const VertexSet& vertices() const { return vertices_; }
  const EdgeSet& edges() const { return edges_; }
  const VertexSet& sources() const { return sources_; }
  const VertexSet& sinks() const { return sinks_; }

  bool has_vertex(const Vertex& v) const { return vertices_.contains(v); }
  bool has_edge(const Vertex& from, const Vertex& to) const {
    return edges_.contains({from, to});
  }
  const VertexSet& successors(const Vertex& v) const;
  const VertexSet& predecessors(const Vertex& v) const;

  bool operator==(const Web& other) const;

 private:
  friend BuiltWeb make_web(std::vector<Vertex>, std::vector<Edge>,
                           std::vector<Vertex>, std::vector<Vertex>,
                           RepairMode);

  VertexSet vertices_;
  EdgeSet edges_;
  VertexSet sources_;
  VertexSet sinks_;
  std::map<Vertex, VertexSet> out_;
  std::map<Vertex, VertexSet> in_;
};

struct BuiltWeb {
  Web web;
  WebRepairs repairs;
};

// Builds a web, repairing convention violations (edges into A or out of B,
// self-loops, duplicate edges, untrimmed sources). In kStrict mode any
// repair other than duplicate collapsing raises InputError instead. Unknown
// or duplicated ids always raise InputError.
BuiltWeb make_web(std::vector<Vertex> vertices, std::vector<Edge> edges,
                  std::vector<Vertex> sources, std::vector<Vertex> sinks,
                  RepairMode mode = RepairMode::kRepair);

// Convenience overload taking sets, always in repair mode.
Web make_web(const VertexSet& vertices, const EdgeSet& edges,
             const VertexSet& sources, const VertexSet& sinks);

// All edges reversed, sources and sinks swapped (then re-trimmed).
Web reverse_web(const Web& web);

// Every vertex from which `targets` can be reached, optionally without
// entering `blocked` (a blocked vertex is never visited, even as a start).
VertexSet reaching(const Web& web, const VertexSet& targets,
                   const VertexSet& blocked = {});

// A simple directed path: a nonempty sequence of pairwise distinct vertices.
// Whether consecutive vertices are joined by edges is a property of a host
// web; see is_path_in.
class Path {
 public:
  explicit Path(std::vector<Vertex> vertices);
  static Path single(Vertex v) { return Path({std::move(v)}); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& initial() const { return vertices_.front(); }
  const Vertex& terminal() const { return vertices_.back(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  bool trivial() const { return vertices_.size() == 1; }

  bool contains(const Vertex& v) const;
  // Position of v on the path; throws PreconditionError if absent.
  std::size_t index_of(const Vertex& v) const;
  std::vector<Edge> edges() const;
  VertexSet vertex_set() const;

  // Pv: the part up to and including v.
  Path prefix(const Vertex& v) const;
  // vP: the part from v on.
  Path suffix(const Vertex& v) const;
  // The subpath from `from` to `to`; `from` must not come after `to`.
  Path segment(const Vertex& from, const Vertex& to) const;
  // P with its initial and terminal vertex removed (possibly empty).
  std::vector<Vertex> interior() const;
  Path reversed() const;

  // u <=_P v.
  bool precedes_or_equal(const Vertex& u, const Vertex& v) const;

  std::string to_string() const;

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

bool is_path_in(const Web& web, const Path& path);

enum class ConcatMode {
  kExtract,  // shortcut a revisited vertex to get a simple path
  kExact,    // require V(p) and V(q) to meet only at the junction
};

// p*q. Requires ter(p) == in(q).
Path concat(const Path& p, const Path& q,
            ConcatMode mode = ConcatMode::kExtract);

// A set of pairwise vertex-disjoint paths, kept sorted.
class Warp {
 public:
  Warp() = default;
  explicit Warp(std::vector<Path> paths);
  // <X>: every vertex of X as a singleton path.
  static Warp singletons(const VertexSet& x);
  // The unique warp with the given vertex and edge sets. Throws InputError
  // if the edges do not form disjoint simple paths over those vertices.
  static Warp from_parts(const VertexSet& vertices, const EdgeSet& edges);

  const std::vector<Path>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }

  VertexSet vertices() const;
  EdgeSet edges() const;
  VertexSet initials() const;
  VertexSet terminals() const;
  // ISO(W): vertices occurring as singleton paths.
  VertexSet isolated() const;

  // W(x), or nullptr.
  const Path* path_through(const Vertex& x) const;
  // W<X>: the paths meeting X.
  Warp meeting(const VertexSet& x) const;
  // W<~X>.
  Warp avoiding(const VertexSet& x) const;

  bool contains(const Path& p) const;

  std::string to_string() const;

  bool operator==(const Warp&) const = default;
  auto operator<=>(const Warp&) const = default;

 private:
  std::vector<Path> paths_;
};

bool is_warp_in(const Web& web, const Warp& warp);

// Every path has in in X, ter in Y and meets X u Y only at its ends.
bool is_xy_warp(const Warp& warp, const VertexSet& x, const VertexSet& y);

// W <= U in the extension order: V[W] and E[W] are contained in V[U], E[U].
bool extends(const Warp& larger, const Warp& smaller);
// Extension with equal initial sets.
bool forward_extends(const Warp& larger, const Warp& smaller);

// A set of paths whose edge set is that of a warp, where two member paths
// meet only when both are nontrivial and one starts where the other ends.
class FracturedWarp {
 public:
  FracturedWarp() = default;
  explicit FracturedWarp(std::vector<Path> paths);

  const std::vector<Path>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  EdgeSet edges() const;
  VertexSet vertices() const;
  VertexSet initials() const;
  VertexSet terminals() const;

  // Every warp is a fractured warp.
  static FracturedWarp from_warp(const Warp& warp);

  bool operator==(const FracturedWarp&) const = default;

 private:
  std::vector<Path> paths_;
};

// Pairwise disjoint paths and directed cycles. A cycle is stored as its
// vertex cycle rotated to start at its least vertex.
class Cyclowarp {
 public:
  Cyclowarp() = default;
  Cyclowarp(std::vector<Path> paths, std::vector<std::vector<Vertex>> cycles);
  // Decomposes an edge set (plus isolated vertices) whose in- and
  // out-degrees are all at most one. Throws InternalError otherwise.
  static Cyclowarp from_edges(const EdgeSet& edges, const VertexSet& isolated);

  const std::vector<Path>& paths() const { return paths_; }
  const std::vector<std::vector<Vertex>>& cycles() const { return cycles_; }
  // C^path.
  Warp path_part() const { return Warp(paths_); }
  EdgeSet edges() const;

  bool operator==(const Cyclowarp&) const = default;

 private:
  std::vector<Path> paths_;
  std::vector<std::vector<Vertex>> cycles_;
};

// W[X]: vertex set X n V[W], edges of W with both ends in X.
Warp warp_restrict(const Warp& warp, const VertexSet& x);
// W - X.
Warp warp_minus(const Warp& warp, const VertexSet& x);
// W|X: W cut at the vertices of X, keeping the edges outside W[X].
FracturedWarp warp_fracture(const Warp& warp, const VertexSet& x);

// U*W and U<>W. Both require V[U] n V[W] to lie in ter[U] n in[W].
Warp warp_star(const Warp& u, const Warp& w);
Warp warp_diamond(const Warp& u, const Warp& w);

// U->W: each path of U carried along the W-path through its terminal, when
// the rest of that W-path avoids V[U].
Warp warp_arrow(const Warp& u, const Warp& w);

// Left fold of warp_arrow over a finite sequence.
Warp warp_uparrow(std::span<const Warp> sequence);
// lim inf of a finite sequence of warps (vertex and edge sets).
Warp warp_lim(std::span<const Warp> sequence);

// W/X in the host web: vertices (V[W] u X) \ RF°(X), edges of W whose tail
// is outside RF°(X) and whose head is outside RF(X).
Warp warp_quotient(const Warp& warp, const VertexSet& x, const Web& host);

// Small set helpers used across the library.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
std::string to_string(const VertexSet& s);

}  // namespace webcalc
