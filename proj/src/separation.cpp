#include "webcalc/separation.hpp"

#include <bit>
#include <cstdint>
#include <deque>

namespace webcalc {

bool is_separating(const Web& web, const VertexSet& s, const VertexSet& x,
                   const VertexSet& y) {
  if (!is_subset(set_intersection(x, y), s)) return false;
  VertexSet seen;
  std::deque<Vertex> queue;
  for (auto& v : x) {
    if (!s.contains(v) && seen.insert(v).second) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = std::move(queue.front());
    queue.pop_front();
    if (y.contains(v)) return false;
    for (auto& next : web.successors(v)) {
      if (!s.contains(next) && seen.insert(next).second) {
        queue.push_back(next);
      }
    }
  }
  return true;
}

RoofReport roof(const Web& web, const VertexSet& s) {
  if (!is_subset(s, web.vertices())) {
    throw PreconditionError("roof: " + to_string(s) +
                            " is not a set of web vertices");
  }
  RoofReport report;
  report.separator = s;
  const VertexSet free = reaching(web, web.sinks(), s);
  report.roofed = set_difference(web.vertices(), free);
  for (auto& v : s) {
    bool essential = web.sinks().contains(v);
    for (auto it = web.successors(v).begin();
         !essential && it != web.successors(v).end(); ++it) {
      essential = free.contains(*it);
    }
    (essential ? report.essential : report.inessential).insert(v);
  }
  report.strict_roof = set_difference(report.roofed, report.essential);
  return report;
}

VertexSet roofed(const Web& web, const VertexSet& s) {
  return roof(web, s).roofed;
}

VertexSet essential_part(const Web& web, const VertexSet& s) {
  return roof(web, s).essential;
}

VertexSet strictly_roofed(const Web& web, const VertexSet& s) {
  return roof(web, s).strict_roof;
}

Web delete_web(const Web& web, const VertexSet& x) {
  EdgeSet edges;
  for (auto& e : web.edges()) {
    if (!x.contains(e.first) && !x.contains(e.second)) edges.insert(e);
  }
  return make_web(set_difference(web.vertices(), x), edges,
                  set_difference(web.sources(), x),
                  set_difference(web.sinks(), x));
}

Web quotient_web(const Web& web, const VertexSet& x) {
  if (intersects(x, web.sources())) {
    throw PreconditionError("quotient: " + to_string(x) +
                            " meets the source set");
  }
  return quotient_over(web, x);
}

Web quotient_over(const Web& web, const VertexSet& x) {
  if (!is_subset(x, web.vertices())) {
    throw PreconditionError("quotient: " + to_string(x) +
                            " is not a set of web vertices");
  }
  const VertexSet gone = strictly_roofed(web, x);
  const VertexSet sources = essential_part(web, set_union(web.sources(), x));
  const VertexSet kept = set_difference(web.vertices(), gone);
  EdgeSet edges;
  for (auto& e : web.edges()) {
    if (!x.contains(e.second) && kept.contains(e.first) &&
        kept.contains(e.second)) {
      edges.insert(e);
    }
  }
  return make_web(kept, edges, sources, web.sinks());
}

Web induced_roofed(const Web& web, const VertexSet& s) {
  if (roofed(web, s) != s) {
    throw PreconditionError("induced_roofed: " + to_string(s) +
                            " is not roofed (RF(S) != S)");
  }
  EdgeSet edges;
  for (auto& e : web.edges()) {
    if (s.contains(e.first) && s.contains(e.second)) edges.insert(e);
  }
  return make_web(s, edges, set_intersection(s, web.sources()),
                  essential_part(web, s));
}

Warp warp_quotient(const Warp& warp, const VertexSet& x, const Web& host) {
  const RoofReport r = roof(host, x);
  EdgeSet edges;
  for (auto& e : warp.edges()) {
    if (!r.strict_roof.contains(e.first) && !r.roofed.contains(e.second)) {
      edges.insert(e);
    }
  }
  return Warp::from_parts(
      set_difference(set_union(warp.vertices(), x), r.strict_roof), edges);
}

namespace {

using Mask = std::uint32_t;

struct Bits {
  std::vector<Vertex> names;
  std::map<Vertex, int> index;
  std::vector<Mask> out;

  explicit Bits(const Web& web) {
    for (auto& v : web.vertices()) {
      index[v] = static_cast<int>(names.size());
      names.push_back(v);
    }
    out.assign(names.size(), 0);
    for (auto& [from, to] : web.edges()) out[index[from]] |= Mask{1} << index[to];
  }

  Mask mask_of(const VertexSet& s) const {
    Mask m = 0;
    for (auto& v : s) {
      if (auto it = index.find(v); it != index.end()) m |= Mask{1} << it->second;
    }
    return m;
  }
};

// Is some vertex of `to` reachable from `from` inside `allowed`?
bool reaches(const Bits& bits, Mask from, Mask to, Mask allowed) {
  Mask seen = from & allowed;
  Mask frontier = seen;
  while (frontier) {
    if (seen & to) return true;
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) {
      next |= bits.out[std::countr_zero(f)];
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return (seen & to) != 0;
}

}  // namespace

std::size_t brute_sigma(const Web& web, const VertexSet& x, const VertexSet& y,
                        std::size_t vertex_bound) {
  const std::size_t n = web.vertices().size();
  if (n > vertex_bound || n > 30) {
    throw BudgetError("brute_sigma: " + std::to_string(n) +
                      " vertices exceed the oracle bound " +
                      std::to_string(vertex_bound));
  }
  const Bits bits(web);
  const Mask xs = bits.mask_of(x);
  const Mask ys = bits.mask_of(y);
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (std::size_t size = 0; size <= n; ++size) {
    if (size == 0) {
      if (!reaches(bits, xs, ys, all)) return 0;
      continue;
    }
    // Gosper's hack over all subsets with `size` bits.
    Mask s = (Mask{1} << size) - 1;
    while (s <= all) {
      if (!reaches(bits, xs, ys, all & ~s)) return size;
      const Mask c = s & -s;
      const Mask r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n;
}

}  // namespace webcalc
