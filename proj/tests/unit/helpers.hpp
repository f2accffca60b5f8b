#pragma once

#include <initializer_list>

#include "webcalc/core.hpp"

namespace testing {

using namespace webcalc;

// A web on the endpoints of `edges` plus any listed sources, sinks and extra
// vertices, repaired by make_web.
inline Web web_of(std::initializer_list<Edge> edges, VertexSet a, VertexSet b,
                  VertexSet extra = {}) {
  VertexSet vs = set_union(set_union(a, b), extra);
  for (auto& [x, y] : edges) {
    vs.insert(x);
    vs.insert(y);
  }
  return make_web(vs, EdgeSet(edges), a, b);
}

inline Path P(std::initializer_list<Vertex> vs) { return Path(std::vector<Vertex>(vs)); }

inline Warp W(std::initializer_list<Path> paths) { return Warp(std::vector<Path>(paths)); }

// a -> x -> b
inline Web chain() { return web_of({{"a", "x"}, {"x", "b"}}, {"a"}, {"b"}); }

// a -> x -> b and a -> y -> b
inline Web diamond() {
  return web_of({{"a", "x"}, {"x", "b"}, {"a", "y"}, {"y", "b"}}, {"a"}, {"b"});
}

// Two sources squeezed through one vertex c.
inline Web bottleneck() {
  return web_of({{"a1", "c"}, {"a2", "c"}, {"c", "b"}}, {"a1", "a2"}, {"b"});
}

inline Web complete_2x2() {
  return web_of({{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}},
                {"a1", "a2"}, {"b1", "b2"});
}

}  // namespace testing
