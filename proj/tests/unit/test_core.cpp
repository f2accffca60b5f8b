#include "doctest.h"
#include "helpers.hpp"

using namespace testing;

namespace {

BuiltWeb build(std::vector<Vertex> vertices, std::vector<Edge> edges,
               std::vector<Vertex> sources, std::vector<Vertex> sinks,
               RepairMode mode = RepairMode::kRepair) {
  return make_web(std::move(vertices), std::move(edges), std::move(sources),
                  std::move(sinks), mode);
}

}  // namespace

TEST_CASE("make_web keeps a valid web and reports no repairs") {
  const BuiltWeb built = build({"a", "b"}, {{"a", "b"}}, {"a"}, {"b"});
  CHECK(built.repairs.empty());
  CHECK(built.web.edges() == EdgeSet{{"a", "b"}});
}

TEST_CASE("make_web drops an edge leaving B into A") {
  const BuiltWeb built =
      build({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {"a"}, {"b"});
  CHECK(built.web.edges() == EdgeSet{{"a", "b"}});
  CHECK(built.repairs.into_sources == EdgeSet{{"b", "a"}});
  CHECK(built.repairs.out_of_sinks == EdgeSet{{"b", "a"}});
}

TEST_CASE("make_web prunes sources that cannot reach B") {
  const BuiltWeb built = build({"a", "x", "b"}, {{"x", "b"}}, {"a", "x"}, {"b"});
  CHECK(built.web.sources() == VertexSet{"x"});
  CHECK(built.repairs.pruned_sources == VertexSet{"a"});
}

TEST_CASE("make_web in strict mode refuses repairs") {
  CHECK_THROWS_AS(build({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {"a"}, {"b"},
                           RepairMode::kStrict),
                  InputError);
  CHECK_THROWS_AS(build({"a"}, {{"a", "a"}}, {}, {}, RepairMode::kStrict),
                  InputError);
  CHECK_NOTHROW(build({"a", "b"}, {{"a", "b"}, {"a", "b"}}, {"a"}, {"b"},
                         RepairMode::kStrict));
}

TEST_CASE("make_web rejects unknown and duplicate ids") {
  CHECK_THROWS_AS(build({"a"}, {{"a", "q"}}, {"a"}, {}), InputError);
  CHECK_THROWS_AS(build({"a", "a"}, {}, {}, {}), InputError);
  CHECK_THROWS_AS(build({"a"}, {}, {"z"}, {}), InputError);
}

TEST_CASE("reverse_web swaps sides and is an involution") {
  const Web r = reverse_web(chain());
  CHECK(r.edges() == EdgeSet{{"b", "x"}, {"x", "a"}});
  CHECK(r.sources() == VertexSet{"b"});
  CHECK(r.sinks() == VertexSet{"a"});
  CHECK(reverse_web(r) == chain());

  const Web star = web_of({{"a", "b1"}, {"a", "b2"}}, {"a"}, {"b1", "b2"});
  const Web rs = reverse_web(star);
  CHECK(rs.edges() == EdgeSet{{"b1", "a"}, {"b2", "a"}});
  CHECK(rs.sources() == VertexSet{"b1", "b2"});
  CHECK(rs.sinks() == VertexSet{"a"});
}

TEST_CASE("paths reject repeated vertices and emptiness") {
  CHECK_THROWS_AS(Path({}), InputError);
  CHECK_THROWS_AS(P({"a", "b", "a"}), InputError);
  CHECK(P({"a", "x", "b"}).interior() == std::vector<Vertex>{"x"});
  CHECK(P({"a", "x", "b"}).segment("x", "b") == P({"x", "b"}));
  CHECK(P({"a", "x", "b"}).to_string() == "(a,x,b)");
}

TEST_CASE("concat joins at the shared vertex and shortcuts revisits") {
  CHECK(concat(P({"a", "x"}), P({"x", "b"})) == P({"a", "x", "b"}));
  CHECK(concat(P({"a", "x", "y"}), P({"y", "x", "b"})) == P({"a", "x", "b"}));
  CHECK(concat(P({"a"}), P({"a", "b"})) == P({"a", "b"}));
  CHECK_THROWS_AS(concat(P({"a", "x", "y"}), P({"y", "x", "b"}), ConcatMode::kExact),
                  PreconditionError);
  CHECK_THROWS_AS(concat(P({"a", "x"}), P({"y", "b"})), PreconditionError);
}

TEST_CASE("warps are vertex-disjoint") {
  CHECK_THROWS_AS(W({P({"a", "x"}), P({"x", "b"})}), InputError);
  const Warp w = W({P({"a", "x"}), P({"c"})});
  CHECK(w.initials() == VertexSet{"a", "c"});
  CHECK(w.terminals() == VertexSet{"x", "c"});
  CHECK(w.isolated() == VertexSet{"c"});
  CHECK(w.to_string() == "{(a,x),(c)}");
}

TEST_CASE("warp_restrict keeps the pieces inside X") {
  const Warp w = W({P({"a", "x", "b"})});
  CHECK(warp_restrict(w, {"a", "b"}) == W({P({"a"}), P({"b"})}));
  CHECK(warp_restrict(w, {"a", "x", "b"}) == w);
  CHECK(warp_restrict(W({P({"a", "x", "y", "b"})}), {"x", "y"}) == W({P({"x", "y"})}));
  CHECK(warp_minus(w, {"x"}) == W({P({"a"}), P({"b"})}));
}

TEST_CASE("warp_fracture cuts paths at X") {
  const FracturedWarp f = warp_fracture(W({P({"a", "x", "b"})}), {"x"});
  CHECK(f.paths() == std::vector<Path>{P({"a", "x"}), P({"x", "b"})});
  CHECK(warp_fracture(W({P({"a", "x", "b"})}), {}) ==
        FracturedWarp::from_warp(W({P({"a", "x", "b"})})));
  CHECK(warp_fracture(W({P({"y"})}), {}).paths() == std::vector<Path>{P({"y"})});
}

TEST_CASE("warp_star and warp_diamond splice at terminals") {
  const Warp u = W({P({"a", "x"})});
  CHECK(warp_star(u, W({P({"x", "b"})})) == W({P({"a", "x", "b"})}));
  CHECK(warp_diamond(u, W({P({"x", "b"})})) == W({P({"a", "x", "b"})}));
  CHECK(warp_star(u, W({P({"y", "b"})})) == u);
  CHECK(warp_diamond(u, W({P({"y", "b"})})) == W({P({"a", "x"}), P({"y", "b"})}));
  const Warp w = W({P({"x", "b"}), P({"c", "d"})});
  CHECK(warp_star(u, w) == W({P({"a", "x", "b"})}));
  CHECK(warp_diamond(u, w) == W({P({"a", "x", "b"}), P({"c", "d"})}));
}

TEST_CASE("warp_arrow extends along the second warp until blocked") {
  CHECK(warp_arrow(W({P({"a"})}), W({P({"a", "b"})})) == W({P({"a", "b"})}));
  const Warp u = W({P({"a", "x"}), P({"c", "y"})});
  CHECK(warp_arrow(u, u) == u);
  // (a,x) would run into the U-path (c,y); (c,y) carries on to b.
  CHECK(warp_arrow(u, W({P({"x", "y", "b"})})) == W({P({"a", "x"}), P({"c", "y", "b"})}));
  CHECK(warp_arrow(W({P({"a", "x"})}), W({P({"x", "y", "b"})})) ==
        W({P({"a", "x", "y", "b"})}));
}

TEST_CASE("warp_uparrow folds a finite sequence") {
  const Warp w1 = W({P({"a", "x"})});
  const Warp w2 = W({P({"a", "x", "b"})});
  const std::vector<Warp> one{w1};
  CHECK(warp_uparrow(one) == w1);
  const std::vector<Warp> two{w1, w2};
  CHECK(warp_uparrow(two) == w2);
  CHECK(warp_uparrow(two) == warp_arrow(w1, w2));
  CHECK(warp_lim(two) == w2);
}

TEST_CASE("warp_quotient on the chain") {
  const Web web = chain();
  const Warp w = W({P({"a", "x", "b"})});
  CHECK(warp_quotient(w, {}, web) == w);
  // RF°({x}) = {a}, so only the edge (x,b) survives.
  CHECK(warp_quotient(w, {"x"}, web) == W({P({"x", "b"})}));
}

TEST_CASE("extension orders") {
  const Warp small = W({P({"a", "x"})});
  const Warp big = W({P({"a", "x", "b"})});
  CHECK(extends(big, small));
  CHECK(forward_extends(big, small));
  CHECK_FALSE(forward_extends(small, big));
  CHECK(extends(W({P({"a", "x", "b"}), P({"c"})}), small));
  CHECK_FALSE(forward_extends(W({P({"a", "x", "b"}), P({"c"})}), small));
}

TEST_CASE("cyclowarp decomposition separates paths from cycles") {
  const Cyclowarp c =
      Cyclowarp::from_edges({{"a", "b"}, {"x", "y"}, {"y", "x"}}, {"q"});
  CHECK(c.path_part() == W({P({"a", "b"}), P({"q"})}));
  REQUIRE(c.cycles().size() == 1);
  CHECK_THROWS_AS(Cyclowarp::from_edges({{"a", "b"}, {"a", "c"}}, {}), InternalError);
}
