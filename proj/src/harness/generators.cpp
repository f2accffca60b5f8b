#include "webcalc/generators.hpp"

#include <algorithm>
#include <functional>

namespace webcalc::gen {

namespace {

template <class T>
const T& pick(const std::vector<T>& items, Rng& rng) {
  return items[rng.below(items.size())];
}

template <class Set>
std::vector<typename Set::value_type> as_vector(const Set& s) {
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<Path> all_paths(const Web& web) {
  std::vector<Path> out;
  std::vector<Vertex> stack;
  std::function<void()> walk = [&] {
    out.emplace_back(stack);
    for (auto& next : web.successors(stack.back())) {
      if (std::find(stack.begin(), stack.end(), next) != stack.end()) continue;
      stack.push_back(next);
      walk();
      stack.pop_back();
    }
  };
  for (auto& v : web.vertices()) {
    stack = {v};
    walk();
  }
  return out;
}

std::vector<Warp> all_ab_warps(const Web& web) {
  std::vector<Path> ab;
  for (auto& p : all_paths(web)) {
    if (web.sources().contains(p.initial()) &&
        web.sinks().contains(p.terminal())) {
      ab.push_back(p);
    }
  }
  std::vector<Warp> out;
  std::vector<Path> chosen;
  VertexSet used;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    out.emplace_back(chosen);
    for (std::size_t k = from; k < ab.size(); ++k) {
      const VertexSet vs = ab[k].vertex_set();
      if (intersects(vs, used)) continue;
      chosen.push_back(ab[k]);
      used.insert(vs.begin(), vs.end());
      choose(k + 1);
      for (auto& v : vs) used.erase(v);
      chosen.pop_back();
    }
  };
  choose(0);
  return out;
}

Warp random_warp(const Web& web, Rng& rng, std::size_t max_paths,
                 const VertexSet& starts) {
  const std::vector<Vertex> pool =
      as_vector(starts.empty() ? web.vertices() : starts);
  VertexSet used;
  std::vector<Path> paths;
  for (std::size_t attempt = 0; attempt < 3 * max_paths; ++attempt) {
    if (paths.size() == max_paths || pool.empty()) break;
    const Vertex& start = pick(pool, rng);
    if (used.contains(start)) continue;
    std::vector<Vertex> walk{start};
    used.insert(start);
    while (!rng.chance(0.25)) {
      std::vector<Vertex> next;
      for (auto& v : web.successors(walk.back())) {
        if (!used.contains(v)) next.push_back(v);
      }
      if (next.empty()) break;
      walk.push_back(pick(next, rng));
      used.insert(walk.back());
    }
    paths.emplace_back(std::move(walk));
  }
  return Warp(std::move(paths));
}

std::optional<AlternatingPath> random_alternating(const Web& web,
                                                  const Warp& warp, Rng& rng) {
  const VertexSet on_warp = warp.vertices();
  const EdgeSet warp_edges = warp.edges();
  std::vector<Link> links;
  Vertex at;
  LinkKind next_kind;
  {
    std::vector<Vertex> off;
    std::vector<Vertex> on_nontrivial;
    for (auto& v : web.vertices()) {
      if (!on_warp.contains(v)) {
        off.push_back(v);
      } else if (warp.path_through(v)->initial() != v) {
        on_nontrivial.push_back(v);
      }
    }
    if (!on_nontrivial.empty() && (off.empty() || rng.chance(0.15))) {
      at = pick(on_nontrivial, rng);
      next_kind = LinkKind::kBackward;
    } else if (!off.empty()) {
      at = pick(off, rng);
      next_kind = LinkKind::kForward;
    } else {
      return std::nullopt;
    }
  }
  const std::size_t max_links = 1 + rng.below(9);
  for (std::size_t round = 0; round < max_links; ++round) {
    if (next_kind == LinkKind::kForward) {
      std::vector<Vertex> walk{at};
      bool landed = false;
      for (;;) {
        std::vector<Vertex> next;
        for (auto& v : web.successors(walk.back())) {
          if (std::find(walk.begin(), walk.end(), v) == walk.end() &&
              !warp_edges.contains({walk.back(), v})) {
            next.push_back(v);
          }
        }
        if (next.empty()) break;
        walk.push_back(pick(next, rng));
        if (on_warp.contains(walk.back())) {
          // Stop on the warp unless crossing on.
          if (!rng.chance(0.2)) {
            landed = true;
            break;
          }
        } else if (rng.chance(0.3)) {
          break;
        }
      }
      if (walk.size() < 2) break;
      links.push_back({LinkKind::kForward, Path(walk)});
      if (!check_alternating(&web, warp, AlternatingPath(links), true).valid) {
        return std::nullopt;
      }
      at = walk.back();
      if (!landed || !on_warp.contains(at)) break;
      next_kind = LinkKind::kBackward;
    } else {
      const Path* host = warp.path_through(at);
      const std::size_t index = host->index_of(at);
      if (index == 0) break;
      const Vertex& back_to = host->vertices()[rng.below(index)];
      links.push_back({LinkKind::kBackward, host->segment(back_to, at)});
      if (!check_alternating(&web, warp, AlternatingPath(links), true).valid) {
        return std::nullopt;
      }
      at = back_to;
      next_kind = LinkKind::kForward;
      if (rng.chance(0.15)) break;
    }
  }
  if (links.empty()) return std::nullopt;
  AlternatingPath q(std::move(links));
  if (!validate_alternating(web, warp, q)) return std::nullopt;
  return q;
}

namespace {

// Names vertices by role with random numbering, so that the lexicographic
// order of the ids carries no information about the shape.
class Namer {
 public:
  explicit Namer(Rng& rng) : rng_(rng) {}
  Vertex fresh() {
    for (;;) {
      Vertex v = "n" + std::to_string(rng_.below(1000));
      if (taken_.insert(v).second) return v;
    }
  }
  std::vector<Vertex> fresh(std::size_t k) {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(fresh());
    return out;
  }
  const VertexSet& taken() const { return taken_; }

 private:
  Rng& rng_;
  VertexSet taken_;
};

// u, some fresh interior vertices, v.
std::vector<Vertex> detour(Namer& names, Rng& rng, const Vertex& u,
                           const Vertex& v) {
  std::vector<Vertex> out{u};
  for (auto& x : names.fresh(rng.below(3))) out.push_back(x);
  out.push_back(v);
  return out;
}

void add_path_edges(EdgeSet& edges, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) edges.insert({vs[i], vs[i + 1]});
}

// Surrounds the given shape with noise: extra vertices, edges among them
// and toward the shape, and extra warp paths over the noise vertices.
AlternatingCase embed(Namer& names, Rng& rng, std::vector<Path> warp_paths,
                      std::vector<Link> links, const Vertex& source,
                      const Vertex& sink, std::string shape) {
  EdgeSet edges;
  for (auto& p : warp_paths) add_path_edges(edges, p.vertices());
  for (auto& l : links) add_path_edges(edges, l.path.vertices());
  VertexSet core = names.taken();
  const auto noise = names.fresh(rng.below(4));
  std::vector<Vertex> all(core.begin(), core.end());
  all.insert(all.end(), noise.begin(), noise.end());
  for (auto& n : noise) {
    for (std::size_t k = 0; k < 2; ++k) {
      const Vertex& other = pick(all, rng);
      if (other == n) continue;
      if (rng.chance(0.5)) {
        edges.insert({n, other});
      } else {
        edges.insert({other, n});
      }
    }
  }
  VertexSet sources{source};
  VertexSet sinks{sink};
  for (auto& n : noise) {
    if (rng.chance(0.2)) sinks.insert(n);
  }
  if (noise.size() >= 2 && !sinks.contains(noise[0]) && rng.chance(0.5)) {
    warp_paths.emplace_back(std::vector<Vertex>{noise[0], noise[1]});
    edges.insert({noise[0], noise[1]});
  }
  VertexSet vertices(all.begin(), all.end());
  Warp warp(std::move(warp_paths));
  // Edges out of sinks, into sources or along warp paths in the wrong
  // direction would be repaired away; drop them here instead.
  EdgeSet kept;
  for (auto& e : edges) {
    if (sinks.contains(e.first) || sources.contains(e.second)) continue;
    kept.insert(e);
  }
  Web web = make_web(vertices, kept, sources, sinks);
  return {std::move(web), std::move(warp), AlternatingPath(std::move(links)),
          std::move(shape)};
}

}  // namespace

AlternatingCase unsafe_two_intervals(Rng& rng) {
  Namer names(rng);
  // Warp path: pre.. a r1.. b gap.. c r2.. d post..
  const Vertex a = names.fresh(), b = names.fresh(), c = names.fresh(),
               d = names.fresh();
  std::vector<Vertex> host = names.fresh(rng.below(2));
  const std::size_t a_at = host.size();
  host.push_back(a);
  for (auto& x : names.fresh(rng.below(2))) host.push_back(x);
  const std::size_t b_at = host.size();
  host.push_back(b);
  for (auto& x : names.fresh(rng.below(2))) host.push_back(x);
  const std::size_t c_at = host.size();
  host.push_back(c);
  for (auto& x : names.fresh(rng.below(2))) host.push_back(x);
  const std::size_t d_at = host.size();
  host.push_back(d);
  for (auto& x : names.fresh(rng.below(2))) host.push_back(x);
  const Path y(host);
  const Vertex s = names.fresh(), t = names.fresh();
  auto seg = [&](std::size_t from, std::size_t to) {
    return Path(std::vector<Vertex>(host.begin() + from, host.begin() + to + 1));
  };
  std::vector<Link> links{
      {LinkKind::kForward, Path(detour(names, rng, s, b))},
      {LinkKind::kBackward, seg(a_at, b_at)},
      {LinkKind::kForward, Path(detour(names, rng, a, d))},
      {LinkKind::kBackward, seg(c_at, d_at)},
      {LinkKind::kForward, Path(detour(names, rng, c, t))},
  };
  return embed(names, rng, {y}, std::move(links), s, t, "two-intervals");
}

AlternatingCase unsafe_cycle(Rng& rng) {
  Namer names(rng);
  // Two warp paths: p0 .. p1 .. p2 and q0 .. q1 .. q2.
  auto line = [&](std::size_t& mid_at, std::size_t& end_at) {
    std::vector<Vertex> vs{names.fresh()};
    for (auto& x : names.fresh(rng.below(2))) vs.push_back(x);
    mid_at = vs.size();
    vs.push_back(names.fresh());
    for (auto& x : names.fresh(rng.below(2))) vs.push_back(x);
    end_at = vs.size();
    vs.push_back(names.fresh());
    return vs;
  };
  std::size_t p_mid, p_end, q_mid, q_end;
  const auto p = line(p_mid, p_end);
  const auto q = line(q_mid, q_end);
  auto seg = [](const std::vector<Vertex>& vs, std::size_t from,
                std::size_t to) {
    return Path(std::vector<Vertex>(vs.begin() + from, vs.begin() + to + 1));
  };
  const Vertex s = names.fresh(), t = names.fresh();
  const Vertex &p0 = p[0], &p1 = p[p_mid], &p2 = p[p_end];
  const Vertex &q0 = q[0], &q1 = q[q_mid], &q2 = q[q_end];
  std::vector<Link> links{
      {LinkKind::kForward, Path(detour(names, rng, s, p2))},
      {LinkKind::kBackward, seg(p, p_mid, p_end)},
      {LinkKind::kForward, Path(detour(names, rng, p1, q1))},
      {LinkKind::kBackward, seg(q, 0, q_mid)},
      {LinkKind::kForward, Path(detour(names, rng, q0, q2))},
      {LinkKind::kBackward, seg(q, q_mid, q_end)},
      {LinkKind::kForward, Path(detour(names, rng, q1, p1))},
      {LinkKind::kBackward, seg(p, 0, p_mid)},
      {LinkKind::kForward, Path(detour(names, rng, p0, t))},
  };
  return embed(names, rng, {Path(p), Path(q)}, std::move(links), s, t,
               "cycle");
}

std::optional<SapCase> sap_case_in(const Web& web, Rng& rng) {
  const Warp y = random_warp(web, rng, 1 + rng.below(3));
  const VertexSet on_y = y.vertices();
  std::vector<Vertex> off;
  for (auto& v : web.vertices()) {
    if (!on_y.contains(v)) off.push_back(v);
  }
  if (off.empty()) return std::nullopt;
  // Z-paths from every initial vertex of Y, then from a few vertices off
  // V[Y], as disjoint random walks.
  VertexSet used = y.initials();
  std::vector<Path> z_paths;
  auto walk_from = [&](const Vertex& start) {
    std::vector<Vertex> walk{start};
    used.insert(start);
    while (!rng.chance(0.2)) {
      std::vector<Vertex> next;
      for (auto& v : web.successors(walk.back())) {
        if (!used.contains(v)) next.push_back(v);
      }
      if (next.empty()) break;
      walk.push_back(pick(next, rng));
      used.insert(walk.back());
    }
    z_paths.emplace_back(std::move(walk));
  };
  for (auto& s : y.initials()) walk_from(s);
  const std::size_t extra = 1 + rng.below(3);
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<Vertex> free;
    for (auto& v : off) {
      if (!used.contains(v)) free.push_back(v);
    }
    if (free.empty()) break;
    walk_from(pick(free, rng));
  }
  Warp z(std::move(z_paths));
  if (set_difference(z.initials(), y.initials()).empty()) return std::nullopt;
  // A Z-path may not stop at a vertex where a backward link can end.
  if (intersects(z.terminals(), set_difference(on_y, y.terminals()))) {
    return std::nullopt;
  }
  if (rng.chance(0.3)) {
    // Cut Z at a few interior vertices off V[Y].
    VertexSet cuts;
    for (auto& path : z.paths()) {
      for (auto& v : path.interior()) {
        if (!on_y.contains(v) && rng.chance(0.5)) cuts.insert(v);
      }
    }
    if (!cuts.empty()) return SapCase{web, warp_fracture(z, cuts), y};
  }
  return SapCase{web, std::move(z), y};
}

SapCase random_sap_case(Rng& rng, std::size_t max_vertices) {
  for (;;) {
    const std::size_t n = 3 + rng.below(max_vertices - 2);
    const double p = 0.15 + 0.35 * rng.uniform();
    const Web web =
        random_web(n, p, static_cast<std::uint64_t>(rng.below(1u << 30)));
    if (auto c = sap_case_in(web, rng)) return std::move(*c);
  }
}

SapCase worked_example() {
  const Warp y({Path({"a", "b", "c", "d"})});
  const Warp z({Path({"a", "d"}), Path({"s", "b", "t"}), Path({"x", "c", "y"})});
  EdgeSet edges = y.edges();
  for (auto& e : z.edges()) edges.insert(e);
  Web web = make_web(VertexSet{"a", "b", "c", "d", "s", "t", "x", "y"}, edges,
                     VertexSet{"a", "s", "x"}, VertexSet{"d", "t", "y"});
  return {std::move(web), z, y};
}

}  // namespace webcalc::gen
