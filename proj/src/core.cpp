#include "webcalc/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace webcalc {

namespace {

const VertexSet& empty_vertex_set() {
  static const VertexSet kEmpty;
  return kEmpty;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += vs[i];
  }
  return out;
}

}  // namespace

std::size_t default_oracle_bound() {
  if (const char* env = std::getenv("WEBCALC_ORACLE_BOUND")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return 16;
}

// --- sets ---------------------------------------------------------------

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

std::string to_string(const VertexSet& s) {
  return "{" + join(std::vector<Vertex>(s.begin(), s.end())) + "}";
}

// --- webs ---------------------------------------------------------------

bool WebRepairs::empty() const {
  return self_loops.empty() && into_sources.empty() && out_of_sinks.empty() &&
         duplicate_edges == 0 && pruned_sources.empty();
}

const VertexSet& Web::successors(const Vertex& v) const {
  auto it = out_.find(v);
  return it == out_.end() ? empty_vertex_set() : it->second;
}

const VertexSet& Web::predecessors(const Vertex& v) const {
  auto it = in_.find(v);
  return it == in_.end() ? empty_vertex_set() : it->second;
}

bool Web::operator==(const Web& other) const {
  return vertices_ == other.vertices_ && edges_ == other.edges_ &&
         sources_ == other.sources_ && sinks_ == other.sinks_;
}

BuiltWeb make_web(std::vector<Vertex> vertices, std::vector<Edge> edges,
                  std::vector<Vertex> sources, std::vector<Vertex> sinks,
                  RepairMode mode) {
  BuiltWeb built;
  Web& web = built.web;
  WebRepairs& repairs = built.repairs;

  for (auto& v : vertices) {
    if (!web.vertices_.insert(v).second) {
      throw InputError("duplicate vertex id '" + v + "'");
    }
  }
  for (auto& a : sources) {
    if (!web.has_vertex(a)) throw InputError("unknown source '" + a + "'");
    web.sources_.insert(a);
  }
  for (auto& b : sinks) {
    if (!web.has_vertex(b)) throw InputError("unknown sink '" + b + "'");
    web.sinks_.insert(b);
  }

  for (auto& e : edges) {
    if (!web.has_vertex(e.first) || !web.has_vertex(e.second)) {
      throw InputError("edge (" + e.first + "," + e.second +
                       ") references an unknown vertex");
    }
    bool keep = true;
    if (e.first == e.second) {
      repairs.self_loops.insert(e);
      keep = false;
    }
    if (web.sources_.contains(e.second)) {
      repairs.into_sources.insert(e);
      keep = false;
    }
    if (web.sinks_.contains(e.first)) {
      repairs.out_of_sinks.insert(e);
      keep = false;
    }
    if (!keep) continue;
    if (!web.edges_.insert(e).second) ++repairs.duplicate_edges;
  }

  for (auto& v : web.vertices_) {
    web.out_[v];
    web.in_[v];
  }
  for (auto& [from, to] : web.edges_) {
    web.out_[from].insert(to);
    web.in_[to].insert(from);
  }

  const VertexSet live = reaching(web, web.sinks_);
  for (auto& a : web.sources_) {
    if (!live.contains(a)) repairs.pruned_sources.insert(a);
  }
  for (auto& a : repairs.pruned_sources) web.sources_.erase(a);

  if (mode == RepairMode::kStrict) {
    if (!repairs.self_loops.empty()) {
      throw InputError("self-loop (" + repairs.self_loops.begin()->first + "," +
                       repairs.self_loops.begin()->second + ")");
    }
    if (!repairs.into_sources.empty()) {
      const auto& e = *repairs.into_sources.begin();
      throw InputError("edge (" + e.first + "," + e.second +
                       ") enters the source set");
    }
    if (!repairs.out_of_sinks.empty()) {
      const auto& e = *repairs.out_of_sinks.begin();
      throw InputError("edge (" + e.first + "," + e.second +
                       ") leaves the sink set");
    }
    if (!repairs.pruned_sources.empty()) {
      throw InputError("source '" + *repairs.pruned_sources.begin() +
                       "' cannot reach the sink set");
    }
  }
  return built;
}

Web make_web(const VertexSet& vertices, const EdgeSet& edges,
             const VertexSet& sources, const VertexSet& sinks) {
  return make_web(std::vector<Vertex>(vertices.begin(), vertices.end()),
                  std::vector<Edge>(edges.begin(), edges.end()),
                  std::vector<Vertex>(sources.begin(), sources.end()),
                  std::vector<Vertex>(sinks.begin(), sinks.end()))
      .web;
}

Web reverse_web(const Web& web) {
  EdgeSet reversed;
  for (auto& [from, to] : web.edges()) reversed.insert({to, from});
  return make_web(web.vertices(), reversed, web.sinks(), web.sources());
}

VertexSet reaching(const Web& web, const VertexSet& targets,
                   const VertexSet& blocked) {
  VertexSet seen;
  std::deque<Vertex> queue;
  for (auto& t : targets) {
    if (web.has_vertex(t) && !blocked.contains(t) && seen.insert(t).second) {
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    Vertex v = std::move(queue.front());
    queue.pop_front();
    for (auto& p : web.predecessors(v)) {
      if (!blocked.contains(p) && seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen;
}

// --- paths --------------------------------------------------------------

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("a path needs at least one vertex");
  VertexSet seen;
  for (auto& v : vertices_) {
    if (!seen.insert(v).second) {
      throw InputError("path (" + join(vertices_) + ") repeats vertex '" + v +
                       "'");
    }
  }
}

bool Path::contains(const Vertex& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t Path::index_of(const Vertex& v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) {
    throw PreconditionError("vertex '" + v + "' is not on path " + to_string());
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    out.emplace_back(vertices_[i], vertices_[i + 1]);
  }
  return out;
}

VertexSet Path::vertex_set() const {
  return VertexSet(vertices_.begin(), vertices_.end());
}

Path Path::prefix(const Vertex& v) const {
  const auto i = index_of(v);
  return Path({vertices_.begin(), vertices_.begin() + i + 1});
}

Path Path::suffix(const Vertex& v) const {
  const auto i = index_of(v);
  return Path({vertices_.begin() + i, vertices_.end()});
}

Path Path::segment(const Vertex& from, const Vertex& to) const {
  const auto i = index_of(from);
  const auto j = index_of(to);
  if (i > j) {
    throw PreconditionError("'" + from + "' comes after '" + to + "' on " +
                            to_string());
  }
  return Path({vertices_.begin() + i, vertices_.begin() + j + 1});
}

std::vector<Vertex> Path::interior() const {
  if (vertices_.size() <= 2) return {};
  return {vertices_.begin() + 1, vertices_.end() - 1};
}

Path Path::reversed() const {
  return Path({vertices_.rbegin(), vertices_.rend()});
}

bool Path::precedes_or_equal(const Vertex& u, const Vertex& v) const {
  return index_of(u) <= index_of(v);
}

std::string Path::to_string() const { return "(" + join(vertices_) + ")"; }

bool is_path_in(const Web& web, const Path& path) {
  for (auto& v : path.vertices()) {
    if (!web.has_vertex(v)) return false;
  }
  for (auto& [from, to] : path.edges()) {
    if (!web.has_edge(from, to)) return false;
  }
  return true;
}

Path concat(const Path& p, const Path& q, ConcatMode mode) {
  if (p.terminal() != q.initial()) {
    throw PreconditionError("cannot concatenate " + p.to_string() + " and " +
                            q.to_string() + ": junction mismatch");
  }
  if (mode == ConcatMode::kExact) {
    const auto common = set_intersection(p.vertex_set(), q.vertex_set());
    if (common != VertexSet{p.terminal()}) {
      throw PreconditionError(p.to_string() + " and " + q.to_string() +
                              " meet outside their junction");
    }
  }
  // Loop erasure: on revisiting a vertex, drop everything after its first
  // visit.
  std::vector<Vertex> out;
  std::map<Vertex, std::size_t> position;
  auto push = [&](const Vertex& v) {
    if (auto it = position.find(v); it != position.end()) {
      for (std::size_t k = it->second + 1; k < out.size(); ++k) {
        position.erase(out[k]);
      }
      out.resize(it->second + 1);
      return;
    }
    position[v] = out.size();
    out.push_back(v);
  };
  for (auto& v : p.vertices()) push(v);
  for (std::size_t i = 1; i < q.vertices().size(); ++i) push(q.vertices()[i]);
  return Path(std::move(out));
}

// --- warps --------------------------------------------------------------

Warp::Warp(std::vector<Path> paths) : paths_(std::move(paths)) {
  std::sort(paths_.begin(), paths_.end());
  VertexSet seen;
  for (auto& p : paths_) {
    for (auto& v : p.vertices()) {
      if (!seen.insert(v).second) {
        throw InputError("paths of a warp share vertex '" + v + "'");
      }
    }
  }
}

Warp Warp::singletons(const VertexSet& x) {
  std::vector<Path> paths;
  for (auto& v : x) paths.push_back(Path::single(v));
  return Warp(std::move(paths));
}

Warp Warp::from_parts(const VertexSet& vertices, const EdgeSet& edges) {
  std::map<Vertex, Vertex> next;
  std::map<Vertex, Vertex> prev;
  for (auto& [from, to] : edges) {
    if (!vertices.contains(from) || !vertices.contains(to)) {
      throw InputError("edge (" + from + "," + to + ") leaves the vertex set");
    }
    if (!next.emplace(from, to).second || !prev.emplace(to, from).second) {
      throw InputError("edges do not form disjoint paths at (" + from + "," +
                       to + ")");
    }
  }
  std::vector<Path> paths;
  std::size_t covered = 0;
  for (auto& v : vertices) {
    if (prev.contains(v)) continue;
    std::vector<Vertex> seq{v};
    for (auto it = next.find(v); it != next.end(); it = next.find(it->second)) {
      seq.push_back(it->second);
    }
    covered += seq.size();
    paths.emplace_back(std::move(seq));
  }
  if (covered != vertices.size()) {
    throw InputError("edges contain a cycle");
  }
  return Warp(std::move(paths));
}

VertexSet Warp::vertices() const {
  VertexSet out;
  for (auto& p : paths_) out.insert(p.vertices().begin(), p.vertices().end());
  return out;
}

EdgeSet Warp::edges() const {
  EdgeSet out;
  for (auto& p : paths_) {
    for (auto& e : p.edges()) out.insert(e);
  }
  return out;
}

VertexSet Warp::initials() const {
  VertexSet out;
  for (auto& p : paths_) out.insert(p.initial());
  return out;
}

VertexSet Warp::terminals() const {
  VertexSet out;
  for (auto& p : paths_) out.insert(p.terminal());
  return out;
}

VertexSet Warp::isolated() const {
  VertexSet out;
  for (auto& p : paths_) {
    if (p.trivial()) out.insert(p.initial());
  }
  return out;
}

const Path* Warp::path_through(const Vertex& x) const {
  for (auto& p : paths_) {
    if (p.contains(x)) return &p;
  }
  return nullptr;
}

Warp Warp::meeting(const VertexSet& x) const {
  std::vector<Path> out;
  for (auto& p : paths_) {
    if (intersects(p.vertex_set(), x)) out.push_back(p);
  }
  return Warp(std::move(out));
}

Warp Warp::avoiding(const VertexSet& x) const {
  std::vector<Path> out;
  for (auto& p : paths_) {
    if (!intersects(p.vertex_set(), x)) out.push_back(p);
  }
  return Warp(std::move(out));
}

bool Warp::contains(const Path& p) const {
  return std::binary_search(paths_.begin(), paths_.end(), p);
}

std::string Warp::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    if (i) out += ',';
    out += paths_[i].to_string();
  }
  return out + "}";
}

bool is_warp_in(const Web& web, const Warp& warp) {
  return std::all_of(warp.paths().begin(), warp.paths().end(),
                     [&](const Path& p) { return is_path_in(web, p); });
}

bool is_xy_warp(const Warp& warp, const VertexSet& x, const VertexSet& y) {
  const VertexSet ends = set_union(x, y);
  for (auto& p : warp.paths()) {
    if (!x.contains(p.initial()) || !y.contains(p.terminal())) return false;
    const VertexSet touched = set_intersection(p.vertex_set(), ends);
    if (touched != VertexSet{p.initial(), p.terminal()}) return false;
  }
  return true;
}

bool extends(const Warp& larger, const Warp& smaller) {
  const EdgeSet big = larger.edges();
  const EdgeSet small = smaller.edges();
  return is_subset(smaller.vertices(), larger.vertices()) &&
         std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool forward_extends(const Warp& larger, const Warp& smaller) {
  return extends(larger, smaller) && larger.initials() == smaller.initials();
}

// --- fractured warps and cyclowarps -------------------------------------

FracturedWarp::FracturedWarp(std::vector<Path> paths)
    : paths_(std::move(paths)) {
  std::sort(paths_.begin(), paths_.end());
  std::map<Vertex, int> out_degree;
  std::map<Vertex, int> in_degree;
  for (auto& p : paths_) {
    for (auto& [from, to] : p.edges()) {
      if (++out_degree[from] > 1 || ++in_degree[to] > 1) {
        throw InputError("fractured warp edges do not form a warp");
      }
    }
  }
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    for (std::size_t j = i + 1; j < paths_.size(); ++j) {
      const Path& p = paths_[i];
      const Path& q = paths_[j];
      for (auto& v : set_intersection(p.vertex_set(), q.vertex_set())) {
        const bool joint =
            !p.trivial() && !q.trivial() &&
            ((v == p.initial() && v == q.terminal()) ||
             (v == q.initial() && v == p.terminal()));
        if (!joint) {
          throw InputError("fractured warp paths " + p.to_string() + " and " +
                           q.to_string() + " meet at '" + v + "'");
        }
      }
    }
  }
  // Shared junctions must not close a cycle.
  (void)Warp::from_parts(vertices(), edges());
}

EdgeSet FracturedWarp::edges() const {
  EdgeSet out;
  for (auto& p : paths_) {
    for (auto& e : p.edges()) out.insert(e);
  }
  return out;
}

VertexSet FracturedWarp::vertices() const {
  VertexSet out;
  for (auto& p : paths_) out.insert(p.vertices().begin(), p.vertices().end());
  return out;
}

VertexSet FracturedWarp::initials() const {
  VertexSet out;
  for (auto& p : paths_) out.insert(p.initial());
  return out;
}

VertexSet FracturedWarp::terminals() const {
  VertexSet out;
  for (auto& p : paths_) out.insert(p.terminal());
  return out;
}

FracturedWarp FracturedWarp::from_warp(const Warp& warp) {
  return FracturedWarp(warp.paths());
}

Cyclowarp::Cyclowarp(std::vector<Path> paths,
                     std::vector<std::vector<Vertex>> cycles)
    : paths_(std::move(paths)), cycles_(std::move(cycles)) {
  std::sort(paths_.begin(), paths_.end());
  std::sort(cycles_.begin(), cycles_.end());
}

Cyclowarp Cyclowarp::from_edges(const EdgeSet& edges,
                                const VertexSet& isolated) {
  std::map<Vertex, Vertex> next;
  std::map<Vertex, Vertex> prev;
  for (auto& [from, to] : edges) {
    if (!next.emplace(from, to).second || !prev.emplace(to, from).second) {
      throw InternalError("edge set is not a cyclowarp at (" + from + "," +
                          to + ")");
    }
  }
  std::vector<Path> paths;
  std::vector<std::vector<Vertex>> cycles;
  VertexSet visited;
  for (auto& [from, to] : next) {
    if (prev.contains(from)) continue;
    std::vector<Vertex> seq{from};
    for (auto it = next.find(from); it != next.end();
         it = next.find(it->second)) {
      seq.push_back(it->second);
    }
    visited.insert(seq.begin(), seq.end());
    paths.emplace_back(std::move(seq));
  }
  for (auto& [from, to] : next) {
    if (visited.contains(from)) continue;
    std::vector<Vertex> cycle{from};
    visited.insert(from);
    for (Vertex v = to; v != from; v = next.at(v)) {
      cycle.push_back(v);
      visited.insert(v);
    }
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                cycle.end());
    cycles.push_back(std::move(cycle));
  }
  for (auto& v : isolated) {
    if (!next.contains(v) && !prev.contains(v)) paths.push_back(Path::single(v));
  }
  return Cyclowarp(std::move(paths), std::move(cycles));
}

EdgeSet Cyclowarp::edges() const {
  EdgeSet out;
  for (auto& p : paths_) {
    for (auto& e : p.edges()) out.insert(e);
  }
  for (auto& c : cycles_) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      out.insert({c[i], c[(i + 1) % c.size()]});
    }
  }
  return out;
}

// --- warp operations ----------------------------------------------------

Warp warp_restrict(const Warp& warp, const VertexSet& x) {
  std::vector<Path> out;
  for (auto& p : warp.paths()) {
    std::vector<Vertex> run;
    for (auto& v : p.vertices()) {
      if (x.contains(v)) {
        run.push_back(v);
      } else if (!run.empty()) {
        out.emplace_back(std::move(run));
        run.clear();
      }
    }
    if (!run.empty()) out.emplace_back(std::move(run));
  }
  return Warp(std::move(out));
}

Warp warp_minus(const Warp& warp, const VertexSet& x) {
  return warp_restrict(warp, set_difference(warp.vertices(), x));
}

FracturedWarp warp_fracture(const Warp& warp, const VertexSet& x) {
  std::vector<Path> out;
  for (auto& p : warp.paths()) {
    if (p.trivial()) {
      if (!x.contains(p.initial())) out.push_back(p);
      continue;
    }
    const auto& vs = p.vertices();
    std::vector<std::size_t> cuts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i == 0 || i + 1 == vs.size() || x.contains(vs[i])) cuts.push_back(i);
    }
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const auto from = cuts[k];
      const auto to = cuts[k + 1];
      const bool inside = to == from + 1 && x.contains(vs[from]) &&
                          x.contains(vs[to]);
      if (inside) continue;
      out.emplace_back(std::vector<Vertex>(vs.begin() + from,
                                           vs.begin() + to + 1));
    }
  }
  return FracturedWarp(std::move(out));
}

namespace {

void require_star_compatible(const Warp& u, const Warp& w) {
  const VertexSet common = set_intersection(u.vertices(), w.vertices());
  const VertexSet allowed = set_intersection(u.terminals(), w.initials());
  if (!is_subset(common, allowed)) {
    throw PreconditionError("warps " + u.to_string() + " and " + w.to_string() +
                            " meet outside ter[U] n in[W]");
  }
}

}  // namespace

Warp warp_star(const Warp& u, const Warp& w) {
  require_star_compatible(u, w);
  std::map<Vertex, const Path*> by_initial;
  for (auto& q : w.paths()) by_initial[q.initial()] = &q;
  std::vector<Path> out;
  for (auto& p : u.paths()) {
    auto it = by_initial.find(p.terminal());
    if (it == by_initial.end()) {
      out.push_back(p);
    } else {
      out.push_back(concat(p, *it->second, ConcatMode::kExact));
    }
  }
  return Warp(std::move(out));
}

Warp warp_diamond(const Warp& u, const Warp& w) {
  require_star_compatible(u, w);
  EdgeSet edges = u.edges();
  const EdgeSet we = w.edges();
  edges.insert(we.begin(), we.end());
  return Warp::from_parts(set_union(u.vertices(), w.vertices()), edges);
}

Warp warp_arrow(const Warp& u, const Warp& w) {
  const VertexSet used = u.vertices();
  std::vector<Path> out;
  for (auto& p : u.paths()) {
    const Vertex& t = p.terminal();
    const Path* q = w.path_through(t);
    if (q == nullptr) {
      out.push_back(p);
      continue;
    }
    const Path tail = q->suffix(t);
    bool blocked = false;
    for (std::size_t i = 1; i < tail.vertices().size(); ++i) {
      if (used.contains(tail.vertices()[i])) {
        blocked = true;
        break;
      }
    }
    out.push_back(blocked ? p : concat(p, tail, ConcatMode::kExact));
  }
  return Warp(std::move(out));
}

Warp warp_uparrow(std::span<const Warp> sequence) {
  if (sequence.empty()) return Warp();
  Warp acc = sequence.front();
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    acc = warp_arrow(acc, sequence[i]);
  }
  return acc;
}

Warp warp_lim(std::span<const Warp> sequence) {
  if (sequence.empty()) return Warp();
  VertexSet vertices;
  EdgeSet edges;
  for (std::size_t start = 0; start < sequence.size(); ++start) {
    VertexSet tail_v = sequence[start].vertices();
    EdgeSet tail_e = sequence[start].edges();
    for (std::size_t i = start + 1; i < sequence.size(); ++i) {
      tail_v = set_intersection(tail_v, sequence[i].vertices());
      const EdgeSet ei = sequence[i].edges();
      EdgeSet kept;
      std::set_intersection(tail_e.begin(), tail_e.end(), ei.begin(), ei.end(),
                            std::inserter(kept, kept.end()));
      tail_e = std::move(kept);
    }
    vertices.insert(tail_v.begin(), tail_v.end());
    edges.insert(tail_e.begin(), tail_e.end());
  }
  return Warp::from_parts(vertices, edges);
}

}  // namespace webcalc
